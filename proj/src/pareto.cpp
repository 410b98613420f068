#include "saat/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "saat/io.hpp"

namespace saat {

namespace {

// Folds a vector into minimization-canonical coordinates: maximized
// objectives are negated so "smaller is better" holds everywhere.
std::array<double, 3> to_min(const ObjectiveVector &v,
                             const std::array<Direction, 3> &directions) {
  std::array<double, 3> raw = {v.acc, v.eng, v.rate};
  for (std::size_t j = 0; j < 3; ++j) {
    if (directions[j] == Direction::maximize) raw[j] = -raw[j];
  }
  return raw;
}

}  // namespace

bool dominates(const ObjectiveVector &a, const ObjectiveVector &b,
               const std::array<Direction, 3> &directions) {
  std::array<double, 3> am = to_min(a, directions);
  std::array<double, 3> bm = to_min(b, directions);
  bool strictly_better = false;
  for (std::size_t j = 0; j < 3; ++j) {
    if (am[j] > bm[j]) return false;
    if (am[j] < bm[j]) strictly_better = true;
  }
  return strictly_better;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<ObjectiveVector> &points,
    const std::array<Direction, 3> &directions) {
  std::size_t n = points.size();
  // Fast non-dominated sort: counts of dominators plus dominated-lists.
  std::vector<std::size_t> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> dominated(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(points[i], points[j], directions)) {
        dominated[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(points[j], points[i], directions)) {
        dominated[j].push_back(i);
        ++domination_count[i];
      }
    }
  }
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (domination_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated[i]) {
        if (--domination_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(
    const std::vector<ObjectiveVector> &front,
    const std::array<Direction, 3> &directions) {
  std::size_t n = front.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> distance(n, 0.0);
  if (n <= 2) {
    std::fill(distance.begin(), distance.end(), inf);
    return distance;
  }
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto value = [&](std::size_t i) {
      std::array<double, 3> m = to_min(front[i], directions);
      return m[j];
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return value(a) < value(b);
                     });
    double lo = value(order.front());
    double hi = value(order.back());
    distance[order.front()] = inf;
    distance[order.back()] = inf;
    if (hi == lo) continue;  // zero-range objective contributes nothing
    for (std::size_t k = 1; k + 1 < n; ++k) {
      std::size_t i = order[k];
      if (distance[i] == inf) continue;
      distance[i] += (value(order[k + 1]) - value(order[k - 1])) / (hi - lo);
    }
  }
  return distance;
}

ParetoFront extract_front(const TrialStore &store,
                          const std::array<Direction, 3> &directions) {
  if (store.trials().empty()) {
    throw FrontError("cannot extract a front from an empty trial store");
  }
  std::vector<const Trial *> unique;
  unique.reserve(store.trials().size());
  for (const Trial &trial : store.trials()) {
    unique.push_back(&trial);
  }
  ParetoFront front;
  for (const Trial *candidate : unique) {
    bool is_dominated = false;
    for (const Trial *other : unique) {
      if (other != candidate &&
          dominates(other->objectives, candidate->objectives, directions)) {
        is_dominated = true;
        break;
      }
    }
    if (!is_dominated) {
      front.members.push_back(FrontEntry{candidate->config,
                                         candidate->objectives,
                                         candidate->canonical_index});
    }
  }
  std::sort(front.members.begin(), front.members.end(),
            [](const FrontEntry &a, const FrontEntry &b) {
              return a.canonical_index < b.canonical_index;
            });
  return front;
}

double hypervolume(const std::vector<ObjectiveVector> &members,
                   const ObjectiveVector &reference,
                   const std::array<Direction, 3> &directions) {
  if (members.empty()) return 0.0;
  std::array<double, 3> ref = to_min(reference, directions);
  std::vector<std::array<double, 3>> points;
  points.reserve(members.size());
  for (const ObjectiveVector &member : members) {
    std::array<double, 3> p = to_min(member, directions);
    for (std::size_t j = 0; j < 3; ++j) {
      if (p[j] >= ref[j]) {
        throw FrontError(
            "hypervolume reference point is not strictly dominated by every "
            "front member");
      }
    }
    points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Sweep over the third coordinate: between consecutive z-levels the
  // dominated cross-section is constant, so the volume is the staircase area
  // of all points at or below the level, times the slab thickness.
  std::vector<double> levels;
  for (const auto &p : points) levels.push_back(p[2]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  levels.push_back(ref[2]);

  auto staircase_area = [&](double z) {
    std::vector<std::pair<double, double>> active;  // (x, y), minimized
    for (const auto &p : points) {
      if (p[2] <= z) active.emplace_back(p[0], p[1]);
    }
    std::sort(active.begin(), active.end());
    double area = 0.0;
    double best_y = ref[1];
    for (const auto &[x, y] : active) {
      if (y >= best_y) continue;  // dominated in the cross-section
      area += (ref[0] - x) * (best_y - y);
      best_y = y;
    }
    return area;
  };

  double volume = 0.0;
  for (std::size_t t = 0; t + 1 < levels.size(); ++t) {
    volume += staircase_area(levels[t]) * (levels[t + 1] - levels[t]);
  }
  return volume;
}

double hypervolume_within_reference(
    const std::vector<ObjectiveVector> &members,
    const ObjectiveVector &reference,
    const std::array<Direction, 3> &directions) {
  std::array<double, 3> ref = to_min(reference, directions);
  std::vector<ObjectiveVector> contributing;
  for (const ObjectiveVector &member : members) {
    std::array<double, 3> p = to_min(member, directions);
    bool inside = true;
    for (std::size_t j = 0; j < 3; ++j) {
      if (p[j] >= ref[j]) inside = false;
    }
    if (inside) contributing.push_back(member);
  }
  if (contributing.empty()) return 0.0;
  return hypervolume(contributing, reference, directions);
}

ObjectiveVector reference_from_front(
    const ParetoFront &front, const std::array<Direction, 3> &directions) {
  if (front.members.empty()) {
    throw FrontError("cannot derive a reference point from an empty front");
  }
  std::array<double, 3> worst = to_min(front.members.front().objectives,
                                       directions);
  std::array<double, 3> best = worst;
  for (const FrontEntry &member : front.members) {
    std::array<double, 3> m = to_min(member.objectives, directions);
    for (std::size_t j = 0; j < 3; ++j) {
      worst[j] = std::max(worst[j], m[j]);
      best[j] = std::min(best[j], m[j]);
    }
  }
  std::array<double, 3> ref;
  for (std::size_t j = 0; j < 3; ++j) {
    ref[j] = worst[j] + 0.1 * (worst[j] - best[j]);
  }
  // Fold back to natural signs.
  ObjectiveVector out{ref[0], ref[1], ref[2]};
  if (directions[0] == Direction::maximize) out.acc = -out.acc;
  if (directions[1] == Direction::maximize) out.eng = -out.eng;
  if (directions[2] == Direction::maximize) out.rate = -out.rate;
  return out;
}

void save_front_csv(const std::string &path, const ParetoFront &front,
                    const SearchSpace &space) {
  std::string out;
  for (const ParameterDef &def : space.parameters()) {
    if (!out.empty()) out += ",";
    out += def.name;
  }
  out += ",acc,eng,rate\n";
  for (const FrontEntry &member : front.members) {
    std::string row;
    for (const ParamValue &value : member.config.values) {
      if (!row.empty()) row += ",";
      row += to_string(value);
    }
    row += "," + format_number(member.objectives.acc);
    row += "," + format_number(member.objectives.eng);
    row += "," + format_number(member.objectives.rate);
    out += row + "\n";
  }
  write_file_atomic(path, out);
}

ParetoFront load_front_csv(const std::string &path, const SearchSpace &space) {
  std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty()) {
    throw FrontError("front file " + path + " is empty");
  }
  std::size_t param_count = space.parameters().size();
  std::size_t expected_fields = param_count + 3;
  ParetoFront front;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = split_csv_line(lines[i]);
    if (fields.size() != expected_fields) {
      throw FrontError("front file " + path + " line " +
                       std::to_string(i + 1) + ": expected " +
                       std::to_string(expected_fields) + " fields, got " +
                       std::to_string(fields.size()));
    }
    FrontEntry member;
    for (std::size_t p = 0; p < param_count; ++p) {
      member.config.values.push_back(
          param_value_from_text(space.parameters()[p], fields[p]));
    }
    if (auto issue = space.validate_conf(member.config)) {
      throw FrontError("front file " + path + " line " +
                       std::to_string(i + 1) + ": " + *issue);
    }
    member.canonical_index = space.canonical_index(member.config);
    member.objectives.acc = std::strtod(fields[param_count].c_str(), nullptr);
    member.objectives.eng =
        std::strtod(fields[param_count + 1].c_str(), nullptr);
    member.objectives.rate =
        std::strtod(fields[param_count + 2].c_str(), nullptr);
    front.members.push_back(std::move(member));
  }
  std::sort(front.members.begin(), front.members.end(),
            [](const FrontEntry &a, const FrontEntry &b) {
              return a.canonical_index < b.canonical_index;
            });
  return front;
}

}  // namespace saat
