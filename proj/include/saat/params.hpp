#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "saat/errors.hpp"

namespace saat {

// A single admissible parameter value: flag, number, or label.
using ParamValue = std::variant<bool, double, std::string>;

std::string to_string(const ParamValue &value);

enum class ParamKind { categorical, stepped };

struct ParameterDef {
  std::string name;
  ParamKind kind = ParamKind::categorical;
  // Ordered admissible values. Stepped domains are materialized here on a
  // decimal grid (rounded to the step's decimal places) so that values like
  // 0.30000000004 snap back onto the grid instead of falling out of domain.
  std::vector<ParamValue> domain;
  int grid_decimals = 0;

  // Position of `value` in the domain, if it is admissible. Stepped numeric
  // lookups snap to the decimal grid first.
  std::optional<std::size_t> position_of(const ParamValue &value) const;
};

struct Configuration {
  std::vector<ParamValue> values;

  bool operator==(const Configuration &other) const = default;
};

std::string to_string(const Configuration &conf);

class SearchSpace {
 public:
  explicit SearchSpace(std::vector<ParameterDef> parameters);

  const std::vector<ParameterDef> &parameters() const { return parameters_; }

  std::size_t cardinality() const;

  // Mixed-radix encoding of per-parameter domain positions; the first
  // parameter is the most significant digit. Bijective with the space.
  std::size_t canonical_index(const Configuration &conf) const;
  Configuration decode(std::size_t index) const;

  // Every configuration exactly once, in canonical_index order.
  std::vector<Configuration> enumerate_all() const;

  // Empty result means the configuration is valid; otherwise the diagnostic
  // names the first offending position.
  std::optional<std::string> validate_conf(const Configuration &conf) const;

  // Index of the parameter with this name; throws SpaceError if absent.
  std::size_t parameter_position(const std::string &name) const;

 private:
  std::vector<ParameterDef> parameters_;
};

SearchSpace parse_space(const nlohmann::json &document);
SearchSpace parse_space_file(const std::string &path);

// Parses a value of this parameter from its serialized text form (as found
// in CSV artifacts): bools as true/false, numbers via strtod, labels as-is.
ParamValue param_value_from_text(const ParameterDef &def,
                                 const std::string &text);

}  // namespace saat
