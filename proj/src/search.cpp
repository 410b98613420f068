#include "saat/search.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "saat/rng.hpp"

namespace saat {

namespace {

void check_budget(const SearchBudget &budget, const SearchSpace &space) {
  if (budget.max_unique_trials == 0) {
    throw TrialLogError("search budget must be positive");
  }
  if (budget.max_unique_trials > space.cardinality()) {
    throw TrialLogError("search budget " +
                        std::to_string(budget.max_unique_trials) +
                        " exceeds space cardinality " +
                        std::to_string(space.cardinality()));
  }
  if (budget.population_size < 2) {
    throw TrialLogError("population size must be at least 2");
  }
}

// Ranks and crowding distances for a population's objective vectors.
struct PopulationOrder {
  std::vector<std::size_t> rank;
  std::vector<double> crowding;
};

PopulationOrder order_population(const std::vector<ObjectiveVector> &points,
                                 const std::array<Direction, 3> &directions) {
  PopulationOrder order;
  order.rank.assign(points.size(), 0);
  order.crowding.assign(points.size(), 0.0);
  auto fronts = non_dominated_sort(points, directions);
  for (std::size_t r = 0; r < fronts.size(); ++r) {
    std::vector<ObjectiveVector> front_points;
    front_points.reserve(fronts[r].size());
    for (std::size_t i : fronts[r]) front_points.push_back(points[i]);
    std::vector<double> distance = crowding_distance(front_points, directions);
    for (std::size_t k = 0; k < fronts[r].size(); ++k) {
      order.rank[fronts[r][k]] = r;
      order.crowding[fronts[r][k]] = distance[k];
    }
  }
  return order;
}

}  // namespace

TrialStore random_search(const SearchSpace &space,
                         const TrialStore::Evaluator &evaluate,
                         const SearchBudget &budget) {
  check_budget(budget, space);
  TrialStore store;
  std::mt19937_64 gen(budget.seed);
  while (store.unique_trials() < budget.max_unique_trials) {
    Configuration conf =
        space.decode(uniform_index(gen, space.cardinality()));
    store.record(space, conf, evaluate, "random", budget.seed);
  }
  return store;
}

TrialStore nsga2_search(const SearchSpace &space,
                        const TrialStore::Evaluator &evaluate,
                        const SearchBudget &budget) {
  check_budget(budget, space);
  const auto directions = default_directions();
  TrialStore store;
  std::mt19937_64 gen(budget.seed);

  auto budget_left = [&] {
    return store.unique_trials() < budget.max_unique_trials;
  };
  // Records a configuration; returns false once the unique budget is full
  // and the proposal was not already seen (the evaluation that would exceed
  // the budget never happens).
  auto record = [&](const Configuration &conf) {
    if (store.seen(space.canonical_index(conf))) {
      store.record(space, conf, evaluate, "nsga2", budget.seed);
      return true;
    }
    if (!budget_left()) return false;
    store.record(space, conf, evaluate, "nsga2", budget.seed);
    return true;
  };

  std::size_t population_size =
      std::min(budget.population_size, space.cardinality());

  // Initial population: uniform without replacement.
  std::vector<Configuration> population;
  std::vector<bool> drawn(space.cardinality(), false);
  while (population.size() < population_size && budget_left()) {
    std::size_t index = uniform_index(gen, space.cardinality());
    if (drawn[index]) continue;
    drawn[index] = true;
    Configuration conf = space.decode(index);
    store.record(space, conf, evaluate, "nsga2", budget.seed);
    population.push_back(std::move(conf));
  }
  if (!budget_left() || population.size() < 2) return store;

  std::size_t gene_count = space.parameters().size();
  double mutation_rate = 1.0 / static_cast<double>(gene_count);

  while (budget_left()) {
    std::vector<ObjectiveVector> parent_points;
    parent_points.reserve(population.size());
    for (const Configuration &conf : population) {
      parent_points.push_back(
          store.record(space, conf, evaluate, "nsga2", budget.seed)
              .trial.objectives);
    }
    PopulationOrder parent_order =
        order_population(parent_points, directions);

    // Binary tournament on (rank, crowding); exact ties fall to a coin flip.
    auto tournament = [&]() -> const Configuration & {
      std::size_t a = uniform_index(gen, population.size());
      std::size_t b = uniform_index(gen, population.size());
      if (parent_order.rank[a] != parent_order.rank[b]) {
        return parent_order.rank[a] < parent_order.rank[b] ? population[a]
                                                           : population[b];
      }
      if (parent_order.crowding[a] != parent_order.crowding[b]) {
        return parent_order.crowding[a] > parent_order.crowding[b]
                   ? population[a]
                   : population[b];
      }
      return with_probability(gen, 0.5) ? population[a] : population[b];
    };

    std::vector<Configuration> offspring;
    offspring.reserve(population.size());
    for (std::size_t c = 0; c < population.size(); ++c) {
      const Configuration &first = tournament();
      const Configuration &second = tournament();
      Configuration child = first;
      if (with_probability(gen, 0.9)) {
        for (std::size_t g = 0; g < gene_count; ++g) {
          if (with_probability(gen, 0.5)) child.values[g] = second.values[g];
        }
      }
      for (std::size_t g = 0; g < gene_count; ++g) {
        if (with_probability(gen, mutation_rate)) {
          const auto &domain = space.parameters()[g].domain;
          child.values[g] = domain[uniform_index(gen, domain.size())];
        }
      }
      offspring.push_back(std::move(child));
    }

    bool exhausted = false;
    for (const Configuration &child : offspring) {
      if (!record(child)) {
        exhausted = true;
        break;
      }
    }
    if (exhausted) break;

    // Elitist environmental selection over parents plus offspring.
    std::vector<Configuration> merged = population;
    merged.insert(merged.end(), offspring.begin(), offspring.end());
    std::vector<ObjectiveVector> merged_points;
    merged_points.reserve(merged.size());
    for (const Configuration &conf : merged) {
      merged_points.push_back(
          store.record(space, conf, evaluate, "nsga2", budget.seed)
              .trial.objectives);
    }
    auto fronts = non_dominated_sort(merged_points, directions);
    std::vector<Configuration> next;
    next.reserve(population.size());
    for (const auto &front : fronts) {
      if (next.size() >= population.size()) break;
      if (next.size() + front.size() <= population.size()) {
        for (std::size_t i : front) next.push_back(merged[i]);
        continue;
      }
      std::vector<ObjectiveVector> front_points;
      front_points.reserve(front.size());
      for (std::size_t i : front) front_points.push_back(merged_points[i]);
      std::vector<double> distance =
          crowding_distance(front_points, directions);
      std::vector<std::size_t> by_crowding(front.size());
      for (std::size_t k = 0; k < front.size(); ++k) by_crowding[k] = k;
      std::stable_sort(by_crowding.begin(), by_crowding.end(),
                       [&](std::size_t a, std::size_t b) {
                         return distance[a] > distance[b];
                       });
      for (std::size_t k : by_crowding) {
        if (next.size() >= population.size()) break;
        next.push_back(merged[front[k]]);
      }
    }
    population = std::move(next);
  }
  return store;
}

}  // namespace saat
