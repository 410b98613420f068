#pragma once

#include <cstdint>

#include "saat/pareto.hpp"
#include "saat/trials.hpp"

namespace saat {

struct SearchBudget {
  std::size_t max_unique_trials = 0;
  std::size_t population_size = 50;
  std::uint64_t seed = 0;
};

// Generational NSGA-II over a discrete space: binary tournament on
// (non-domination rank, crowding distance), uniform crossover with
// probability 0.9 (each gene from either parent with probability 0.5),
// per-parameter mutation with probability 1/n drawn uniformly from the
// parameter's domain, and elitist environmental selection by rank then
// crowding. Duplicate proposals are served from the store and do not consume
// budget; the run stops exactly when the store holds max_unique_trials
// unique configurations.
TrialStore nsga2_search(const SearchSpace &space,
                        const TrialStore::Evaluator &evaluate,
                        const SearchBudget &budget);

// Uniform draws over the whole space, deduplicated through the store, until
// the unique-trial budget is reached.
TrialStore random_search(const SearchSpace &space,
                         const TrialStore::Evaluator &evaluate,
                         const SearchBudget &budget);

}  // namespace saat
