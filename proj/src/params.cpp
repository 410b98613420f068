#include "saat/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "saat/io.hpp"

namespace saat {

namespace {

// Decimal places needed to represent `value` exactly on a short decimal
// grid (capped at 9, plenty for step grids like 0.1 or 0.05).
int decimals_of(double value) {
  for (int d = 0; d <= 9; ++d) {
    double scale = std::pow(10.0, d);
    double scaled = value * scale;
    if (std::abs(scaled - std::round(scaled)) < 1e-9 * std::max(1.0, std::abs(scaled))) {
      return d;
    }
  }
  return 9;
}

double round_to_decimals(double value, int decimals) {
  double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

}  // namespace

std::string to_string(const ParamValue &value) {
  if (const bool *flag = std::get_if<bool>(&value)) {
    return *flag ? "true" : "false";
  }
  if (const double *number = std::get_if<double>(&value)) {
    return format_number(*number);
  }
  return std::get<std::string>(value);
}

std::string to_string(const Configuration &conf) {
  std::string out = "(";
  for (std::size_t i = 0; i < conf.values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(conf.values[i]);
  }
  out += ")";
  return out;
}

std::optional<std::size_t> ParameterDef::position_of(
    const ParamValue &value) const {
  if (kind == ParamKind::stepped) {
    const double *number = std::get_if<double>(&value);
    if (number == nullptr) return std::nullopt;
    double snapped = round_to_decimals(*number, grid_decimals);
    if (std::abs(snapped - *number) > 1e-9) return std::nullopt;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (std::get<double>(domain[i]) == snapped) return i;
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == value) return i;
  }
  return std::nullopt;
}

SearchSpace::SearchSpace(std::vector<ParameterDef> parameters)
    : parameters_(std::move(parameters)) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    const ParameterDef &def = parameters_[i];
    if (def.domain.empty()) {
      throw SpaceError("parameter '" + def.name + "' (position " +
                       std::to_string(i) + ") has an empty domain");
    }
    if (!names.insert(def.name).second) {
      throw SpaceError("duplicate parameter name '" + def.name + "'");
    }
    for (std::size_t a = 0; a < def.domain.size(); ++a) {
      for (std::size_t b = a + 1; b < def.domain.size(); ++b) {
        if (def.domain[a] == def.domain[b]) {
          throw SpaceError("parameter '" + def.name +
                           "' has a duplicate domain value: " +
                           saat::to_string(def.domain[a]));
        }
      }
    }
  }
}

std::size_t SearchSpace::cardinality() const {
  std::size_t product = 1;
  for (const ParameterDef &def : parameters_) {
    product *= def.domain.size();
  }
  return product;
}

std::size_t SearchSpace::canonical_index(const Configuration &conf) const {
  if (conf.values.size() != parameters_.size()) {
    throw SpaceError("configuration has " +
                     std::to_string(conf.values.size()) + " values, space has " +
                     std::to_string(parameters_.size()) + " parameters");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    auto pos = parameters_[i].position_of(conf.values[i]);
    if (!pos) {
      throw SpaceError("value " + saat::to_string(conf.values[i]) +
                       " is not in the domain of parameter '" +
                       parameters_[i].name + "'");
    }
    index = index * parameters_[i].domain.size() + *pos;
  }
  return index;
}

Configuration SearchSpace::decode(std::size_t index) const {
  if (index >= cardinality()) {
    throw SpaceError("canonical index " + std::to_string(index) +
                     " out of range for cardinality " +
                     std::to_string(cardinality()));
  }
  std::vector<ParamValue> values(parameters_.size());
  for (std::size_t i = parameters_.size(); i-- > 0;) {
    std::size_t radix = parameters_[i].domain.size();
    values[i] = parameters_[i].domain[index % radix];
    index /= radix;
  }
  return Configuration{std::move(values)};
}

std::vector<Configuration> SearchSpace::enumerate_all() const {
  std::vector<Configuration> all;
  std::size_t total = cardinality();
  all.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    all.push_back(decode(index));
  }
  return all;
}

std::optional<std::string> SearchSpace::validate_conf(
    const Configuration &conf) const {
  if (conf.values.size() != parameters_.size()) {
    return "expected " + std::to_string(parameters_.size()) +
           " values, got " + std::to_string(conf.values.size());
  }
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    if (!parameters_[i].position_of(conf.values[i])) {
      return "position " + std::to_string(i) + " ('" + parameters_[i].name +
             "'): value " + saat::to_string(conf.values[i]) +
             " is not in the domain";
    }
  }
  return std::nullopt;
}

std::size_t SearchSpace::parameter_position(const std::string &name) const {
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    if (parameters_[i].name == name) return i;
  }
  throw SpaceError("space has no parameter named '" + name + "'");
}

namespace {

ParamValue param_value_from_json(const nlohmann::json &value,
                                 const std::string &param_name) {
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return value.get<std::string>();
  throw SpaceError("parameter '" + param_name +
                   "' has a domain value that is not a boolean, number, or "
                   "string");
}

}  // namespace

SearchSpace parse_space(const nlohmann::json &document) {
  if (!document.is_object() || !document.contains("parameters") ||
      !document["parameters"].is_array()) {
    throw SpaceError("space document must be an object with a 'parameters' "
                     "list");
  }
  std::vector<ParameterDef> defs;
  std::size_t position = 0;
  for (const nlohmann::json &entry : document["parameters"]) {
    std::string where = "parameter at position " + std::to_string(position);
    if (!entry.is_object() || !entry.contains("name") ||
        !entry["name"].is_string()) {
      throw SpaceError(where + " is missing a string 'name'");
    }
    ParameterDef def;
    def.name = entry["name"].get<std::string>();
    where = "parameter '" + def.name + "' (position " +
            std::to_string(position) + ")";
    if (!entry.contains("kind") || !entry["kind"].is_string()) {
      throw SpaceError(where + " is missing a string 'kind'");
    }
    std::string kind = entry["kind"].get<std::string>();
    if (kind == "categorical") {
      def.kind = ParamKind::categorical;
      if (!entry.contains("values") || !entry["values"].is_array() ||
          entry["values"].empty()) {
        throw SpaceError(where + " needs a non-empty 'values' list");
      }
      for (const nlohmann::json &value : entry["values"]) {
        def.domain.push_back(param_value_from_json(value, def.name));
      }
    } else if (kind == "stepped") {
      def.kind = ParamKind::stepped;
      for (const char *field : {"low", "high", "step"}) {
        if (!entry.contains(field) || !entry[field].is_number()) {
          throw SpaceError(where + " needs numeric '" + field + "'");
        }
      }
      double low = entry["low"].get<double>();
      double high = entry["high"].get<double>();
      double step = entry["step"].get<double>();
      if (step <= 0) {
        throw SpaceError(where + " has non-positive step " +
                         format_number(step));
      }
      if (high < low) {
        throw SpaceError(where + " has high < low");
      }
      def.grid_decimals = std::max(decimals_of(low), decimals_of(step));
      std::size_t count =
          static_cast<std::size_t>(std::floor((high - low) / step + 1e-9)) + 1;
      for (std::size_t i = 0; i < count; ++i) {
        def.domain.push_back(
            round_to_decimals(low + static_cast<double>(i) * step,
                              def.grid_decimals));
      }
    } else {
      throw SpaceError(where + " has unknown kind '" + kind +
                       "' (expected categorical or stepped)");
    }
    defs.push_back(std::move(def));
    ++position;
  }
  return SearchSpace(std::move(defs));
}

SearchSpace parse_space_file(const std::string &path) {
  try {
    return parse_space(load_json_file(path));
  } catch (const SpaceError &err) {
    throw SpaceError(std::string(err.what()) + " (in " + path + ")");
  }
}

ParamValue param_value_from_text(const ParameterDef &def,
                                 const std::string &text) {
  bool domain_is_bool = std::holds_alternative<bool>(def.domain.front());
  bool domain_is_number = std::holds_alternative<double>(def.domain.front());
  if (domain_is_bool) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw SpaceError("parameter '" + def.name + "': expected true/false, got '" +
                     text + "'");
  }
  if (domain_is_number) {
    char *end = nullptr;
    double number = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
      throw SpaceError("parameter '" + def.name + "': expected a number, got '" +
                       text + "'");
    }
    return number;
  }
  return text;
}

}  // namespace saat
