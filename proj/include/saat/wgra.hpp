#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "saat/pareto.hpp"

namespace saat {

struct ModeSpec {
  std::string name;
  // Per-objective (acc, eng, rate). Weights are nonnegative and sum to 1
  // after parsing; thresholds are cutoffs with 0 meaning "no filter".
  std::array<double, 3> weights{};
  std::array<double, 3> thresholds{};
};

// A mode resolved to a concrete configuration: the filtered front member
// with the highest gray relational grade.
struct OperationMode {
  ModeSpec spec;
  Configuration chosen;
  ObjectiveVector objectives;
  double grg = 0.0;
};

// Parses {"modes": [{name, weights, thresholds}, ...]}. Weight triples whose
// sum is within 5% of 1 are renormalized to exactly 1 (published triples like
// 0.33/0.33/0.33 sum to 0.99; the argmax is scale-invariant, so renormalizing
// changes no selection); anything further off is rejected.
std::vector<ModeSpec> parse_mode_specs(const nlohmann::json &document);
std::vector<ModeSpec> parse_mode_specs_file(const std::string &path);

// Drops members below a quality floor (maximized objectives) or above a
// ceiling (minimized objectives); a threshold of 0 disables that objective's
// filter. Throws EmptyAfterFilterError naming the tightest threshold when
// nothing survives.
ParetoFront filter_front(const ParetoFront &front,
                         const std::array<double, 3> &thresholds,
                         const std::array<Direction, 3> &directions);

// Min-max normalization of the members' objective matrix into [0,1], larger
// is better in every column after direction folding; a zero-range column
// maps to 1.0 for all members.
std::vector<std::array<double, 3>> normalize_objectives(
    const std::vector<FrontEntry> &members,
    const std::array<Direction, 3> &directions);

// Component-wise maximum of the normalized matrix.
std::array<double, 3> reference_network(
    const std::vector<std::array<double, 3>> &normalized);

// Gray relational grades against the reference: with deviations
// d_ij = |ref_j - F_ij| and global extremes dmin/dmax, each coefficient is
// (dmin + zeta*dmax) / (d_ij + zeta*dmax) and the grade is the weighted sum.
// When dmax is 0 every member coincides with the reference and all grades
// are 1. Grades lie in (0, 1].
std::vector<double> gray_relational_grades(
    const std::vector<std::array<double, 3>> &normalized,
    const std::array<double, 3> &reference,
    const std::array<double, 3> &weights, double zeta);

// filter -> normalize -> reference -> grade -> argmax. Exact grade ties are
// broken toward the lowest canonical index (front members are kept in that
// order). zeta must lie in (0, 1].
OperationMode select_mode_config(const ParetoFront &front,
                                 const ModeSpec &spec, double zeta);

void save_mode_table_csv(const std::string &path,
                         const std::vector<OperationMode> &modes,
                         const SearchSpace &space);
std::vector<OperationMode> load_mode_table_csv(const std::string &path,
                                               const SearchSpace &space);

}  // namespace saat
