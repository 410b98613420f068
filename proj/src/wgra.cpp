#include "saat/wgra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "saat/io.hpp"

namespace saat {

namespace {

double objective_component(const ObjectiveVector &v, std::size_t j) {
  switch (j) {
    case 0: return v.acc;
    case 1: return v.eng;
    default: return v.rate;
  }
}

}  // namespace

std::vector<ModeSpec> parse_mode_specs(const nlohmann::json &document) {
  if (!document.is_object() || !document.contains("modes") ||
      !document["modes"].is_array() || document["modes"].empty()) {
    throw ModeSpecError("mode document must be an object with a non-empty "
                        "'modes' list");
  }
  std::vector<ModeSpec> specs;
  for (const nlohmann::json &entry : document["modes"]) {
    if (!entry.contains("name") || !entry["name"].is_string()) {
      throw ModeSpecError("mode entry is missing a string 'name'");
    }
    ModeSpec spec;
    spec.name = entry["name"].get<std::string>();
    for (const char *field : {"weights", "thresholds"}) {
      if (!entry.contains(field) || !entry[field].is_array() ||
          entry[field].size() != 3) {
        throw ModeSpecError("mode '" + spec.name + "' needs a 3-element '" +
                            field + "' list");
      }
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      spec.weights[j] = entry["weights"][j].get<double>();
      spec.thresholds[j] = entry["thresholds"][j].get<double>();
      if (spec.weights[j] < 0) {
        throw ModeSpecError("mode '" + spec.name +
                            "' has a negative weight");
      }
      if (spec.thresholds[j] < 0) {
        throw ModeSpecError("mode '" + spec.name +
                            "' has a negative threshold");
      }
      sum += spec.weights[j];
    }
    // Published weight triples are sometimes short of an exact unit sum
    // (0.33 + 0.33 + 0.33 = 0.99). Scaling all weights by a constant cannot
    // change the selection, so triples within 5% are renormalized to
    // exactly 1; anything further off is treated as a typo.
    if (std::abs(sum - 1.0) > 0.05) {
      throw ModeSpecError("mode '" + spec.name + "' weights sum to " +
                          format_number(sum) + ", expected 1");
    }
    for (double &w : spec.weights) w /= sum;
    for (const auto &other : specs) {
      if (other.name == spec.name) {
        throw ModeSpecError("duplicate mode name '" + spec.name + "'");
      }
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::vector<ModeSpec> parse_mode_specs_file(const std::string &path) {
  try {
    return parse_mode_specs(load_json_file(path));
  } catch (const ModeSpecError &err) {
    throw ModeSpecError(std::string(err.what()) + " (in " + path + ")");
  }
}

ParetoFront filter_front(const ParetoFront &front,
                         const std::array<double, 3> &thresholds,
                         const std::array<Direction, 3> &directions) {
  auto passes = [&](const FrontEntry &member, std::size_t j) {
    if (thresholds[j] == 0.0) return true;
    double value = objective_component(member.objectives, j);
    return directions[j] == Direction::maximize ? value >= thresholds[j]
                                                : value <= thresholds[j];
  };
  ParetoFront filtered;
  for (const FrontEntry &member : front.members) {
    bool keep = true;
    for (std::size_t j = 0; j < 3 && keep; ++j) keep = passes(member, j);
    if (keep) filtered.members.push_back(member);
  }
  if (filtered.members.empty() && !front.members.empty()) {
    // Name the threshold that on its own rejects the most members.
    std::size_t worst_j = 0;
    std::size_t worst_drops = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (thresholds[j] == 0.0) continue;
      std::size_t drops = 0;
      for (const FrontEntry &member : front.members) {
        if (!passes(member, j)) ++drops;
      }
      if (drops > worst_drops) {
        worst_drops = drops;
        worst_j = j;
      }
    }
    throw EmptyAfterFilterError(
        "threshold filter removed every front member; tightest cutoff is '" +
        default_objectives()[worst_j].name + "' at " +
        format_number(thresholds[worst_j]));
  }
  return filtered;
}

std::vector<std::array<double, 3>> normalize_objectives(
    const std::vector<FrontEntry> &members,
    const std::array<Direction, 3> &directions) {
  if (members.empty()) {
    throw ModeSpecError("cannot normalize an empty member list");
  }
  std::vector<std::array<double, 3>> normalized(members.size());
  for (std::size_t j = 0; j < 3; ++j) {
    double lo = objective_component(members.front().objectives, j);
    double hi = lo;
    for (const FrontEntry &member : members) {
      double value = objective_component(member.objectives, j);
      if (!std::isfinite(value)) {
        throw ModeSpecError("objective '" + default_objectives()[j].name +
                            "' has a non-finite value");
      }
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      double value = objective_component(members[i].objectives, j);
      if (hi == lo) {
        normalized[i][j] = 1.0;  // constant column: best by convention
      } else if (directions[j] == Direction::maximize) {
        normalized[i][j] = (value - lo) / (hi - lo);
      } else {
        normalized[i][j] = (hi - value) / (hi - lo);
      }
    }
  }
  return normalized;
}

std::array<double, 3> reference_network(
    const std::vector<std::array<double, 3>> &normalized) {
  if (normalized.empty()) {
    throw ModeSpecError("cannot build a reference from an empty matrix");
  }
  std::array<double, 3> reference = normalized.front();
  for (const auto &row : normalized) {
    for (std::size_t j = 0; j < 3; ++j) {
      reference[j] = std::max(reference[j], row[j]);
    }
  }
  return reference;
}

std::vector<double> gray_relational_grades(
    const std::vector<std::array<double, 3>> &normalized,
    const std::array<double, 3> &reference,
    const std::array<double, 3> &weights, double zeta) {
  if (normalized.empty()) {
    throw ModeSpecError("cannot grade an empty matrix");
  }
  if (!(zeta > 0.0 && zeta <= 1.0)) {
    throw ModeSpecError("zeta must lie in (0, 1], got " +
                        format_number(zeta));
  }
  double deviation_min = std::numeric_limits<double>::infinity();
  double deviation_max = 0.0;
  std::vector<std::array<double, 3>> deviation(normalized.size());
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      deviation[i][j] = std::abs(reference[j] - normalized[i][j]);
      deviation_min = std::min(deviation_min, deviation[i][j]);
      deviation_max = std::max(deviation_max, deviation[i][j]);
    }
  }
  std::vector<double> grades(normalized.size());
  if (deviation_max == 0.0) {
    // Every member coincides with the reference.
    std::fill(grades.begin(), grades.end(), 1.0);
    return grades;
  }
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    double grade = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      double coefficient = (deviation_min + zeta * deviation_max) /
                           (deviation[i][j] + zeta * deviation_max);
      grade += weights[j] * coefficient;
    }
    grades[i] = grade;
  }
  return grades;
}

OperationMode select_mode_config(const ParetoFront &front,
                                 const ModeSpec &spec, double zeta) {
  if (front.members.empty()) {
    throw ModeSpecError("cannot select mode '" + spec.name +
                        "' from an empty front");
  }
  const auto directions = default_directions();
  ParetoFront filtered = filter_front(front, spec.thresholds, directions);
  auto normalized = normalize_objectives(filtered.members, directions);
  auto reference = reference_network(normalized);
  auto grades =
      gray_relational_grades(normalized, reference, spec.weights, zeta);
  // Members are in canonical-index order, so the first strict maximum is
  // also the lowest-index tie winner.
  std::size_t best = 0;
  for (std::size_t i = 1; i < grades.size(); ++i) {
    if (grades[i] > grades[best]) best = i;
  }
  OperationMode mode;
  mode.spec = spec;
  mode.chosen = filtered.members[best].config;
  mode.objectives = filtered.members[best].objectives;
  mode.grg = grades[best];
  return mode;
}

void save_mode_table_csv(const std::string &path,
                         const std::vector<OperationMode> &modes,
                         const SearchSpace &space) {
  std::string out = "mode";
  for (const ParameterDef &def : space.parameters()) {
    out += "," + def.name;
  }
  out += ",acc,eng,rate,grg,w_acc,w_eng,w_rate,t_acc,t_eng,t_rate\n";
  for (const OperationMode &mode : modes) {
    out += mode.spec.name;
    for (const ParamValue &value : mode.chosen.values) {
      out += "," + to_string(value);
    }
    out += "," + format_number(mode.objectives.acc);
    out += "," + format_number(mode.objectives.eng);
    out += "," + format_number(mode.objectives.rate);
    out += "," + format_number(mode.grg);
    for (double w : mode.spec.weights) out += "," + format_number(w);
    for (double t : mode.spec.thresholds) out += "," + format_number(t);
    out += "\n";
  }
  write_file_atomic(path, out);
}

std::vector<OperationMode> load_mode_table_csv(const std::string &path,
                                               const SearchSpace &space) {
  std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.size() < 2) {
    throw ModeSpecError("mode table " + path + " has no rows");
  }
  std::size_t param_count = space.parameters().size();
  std::size_t expected_fields = 1 + param_count + 4 + 6;
  std::vector<OperationMode> modes;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = split_csv_line(lines[i]);
    if (fields.size() != expected_fields) {
      throw ModeSpecError("mode table " + path + " line " +
                          std::to_string(i + 1) + ": expected " +
                          std::to_string(expected_fields) +
                          " fields, got " + std::to_string(fields.size()));
    }
    OperationMode mode;
    mode.spec.name = fields[0];
    for (std::size_t p = 0; p < param_count; ++p) {
      mode.chosen.values.push_back(
          param_value_from_text(space.parameters()[p], fields[1 + p]));
    }
    if (auto issue = space.validate_conf(mode.chosen)) {
      throw ModeSpecError("mode table " + path + " line " +
                          std::to_string(i + 1) + ": " + *issue);
    }
    std::size_t at = 1 + param_count;
    mode.objectives.acc = std::strtod(fields[at++].c_str(), nullptr);
    mode.objectives.eng = std::strtod(fields[at++].c_str(), nullptr);
    mode.objectives.rate = std::strtod(fields[at++].c_str(), nullptr);
    mode.grg = std::strtod(fields[at++].c_str(), nullptr);
    for (std::size_t j = 0; j < 3; ++j) {
      mode.spec.weights[j] = std::strtod(fields[at++].c_str(), nullptr);
    }
    for (std::size_t j = 0; j < 3; ++j) {
      mode.spec.thresholds[j] = std::strtod(fields[at++].c_str(), nullptr);
    }
    modes.push_back(std::move(mode));
  }
  return modes;
}

}  // namespace saat
