#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "saat/objectives.hpp"
#include "saat/params.hpp"
#include "saat/trials.hpp"

namespace saat {

struct FrontEntry {
  Configuration config;
  ObjectiveVector objectives;
  std::size_t canonical_index = 0;
};

// Non-dominated subset of a trial history. Members are kept sorted by
// canonical index so exports and tie-breaks are deterministic; entries with
// identical objective vectors are all retained.
struct ParetoFront {
  std::vector<FrontEntry> members;
};

// True iff a is no worse than b in every objective (per direction) and
// strictly better in at least one. Irreflexive: dominates(a, a) is false.
bool dominates(const ObjectiveVector &a, const ObjectiveVector &b,
               const std::array<Direction, 3> &directions);

// Partition into fronts F0, F1, ...: each returned group holds indices into
// `points`; members of group k are dominated only by members of earlier
// groups.
std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<ObjectiveVector> &points,
    const std::array<Direction, 3> &directions);

// Crowding distance for one front. Boundary members per objective get
// infinity; interior members accumulate normalized neighbor gaps; an
// objective with zero range contributes nothing. Fronts of size <= 2 are all
// boundary, hence all infinite.
std::vector<double> crowding_distance(
    const std::vector<ObjectiveVector> &front,
    const std::array<Direction, 3> &directions);

// The maximal non-dominated subset of the store's unique trials.
ParetoFront extract_front(const TrialStore &store,
                          const std::array<Direction, 3> &directions);

// Exact dominated hypervolume for the three-objective case: maximized
// objectives are negated internally, then a sweep over the third coordinate
// accumulates 2-D staircase areas. The reference point must be strictly
// dominated by every member; contributions are measured toward it.
double hypervolume(const std::vector<ObjectiveVector> &members,
                   const ObjectiveVector &reference,
                   const std::array<Direction, 3> &directions);

// Hypervolume of the contributing subset: members at or beyond the reference
// in any coordinate dominate no volume inside the reference box and are
// dropped instead of rejected. This is the right call for measuring sampled
// fronts against a fixed anchor reference that their worst members may
// violate.
double hypervolume_within_reference(
    const std::vector<ObjectiveVector> &members,
    const ObjectiveVector &reference,
    const std::array<Direction, 3> &directions);

// Fixed reference point derived from a front: per-objective worst value,
// worsened further by 10% of that front's per-objective range (natural
// signs). Keeps every front measurable against one anchor.
ObjectiveVector reference_from_front(const ParetoFront &front,
                                     const std::array<Direction, 3> &directions);

void save_front_csv(const std::string &path, const ParetoFront &front,
                    const SearchSpace &space);
ParetoFront load_front_csv(const std::string &path, const SearchSpace &space);

}  // namespace saat
