#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circlet/complex.hpp"
#include "circlet/cover.hpp"

namespace circlet {

// Two matched pairs at one edge whose faces lie in different surface
// components; swapping partners there forms the connected sum.
struct SpliceSite {
  std::size_t edge;
  std::pair<std::size_t, std::size_t> pair1;
  std::pair<std::size_t, std::size_t> pair2;

  bool operator==(const SpliceSite&) const = default;
};

// Smallest edge (id order) whose matching contains two pairs in different
// components, with the lexicographically first such pairs.  Returns
// nullopt when the surface has a single component.  Throws
// std::logic_error if no splice edge exists despite several components
// (impossible for a strongly connected base).
std::optional<SpliceSite> find_splice_edge(
    const TwoComplex& complex, const GluingAssignment& assignment,
    const std::vector<std::vector<std::size_t>>& component_faces);

// Rewrites the matching at the edge from {p1, p2} to
// {p1.first, p2.first}, {p1.second, p2.second}; all other edges unchanged.
// Pair order is significant: applying the result pairs again restores the
// original assignment.  Throws std::invalid_argument if the pairs are not
// distinct members of the matching.
GluingAssignment splice(const GluingAssignment& assignment, std::size_t edge,
                        std::pair<std::size_t, std::size_t> p1,
                        std::pair<std::size_t, std::size_t> p2);

// One merge step of the cover pipeline, recorded for tracing.
struct SpliceStep {
  Id edge;
  std::pair<Id, Id> pair1;
  std::pair<Id, Id> pair2;
  std::size_t components_after = 0;
  int chi_after = 0;
};

struct EulerCoverResult {
  CoverMap cover;
  std::vector<SpliceStep> trace;
};

// Connected Euler cover of a strongly connected even complex: decompose
// into circlets, glue each part canonically, then splice components
// together (each splice merges exactly two, so exactly parts-1 splices).
// Throws std::invalid_argument when the preconditions fail.
EulerCoverResult euler_cover(const TwoComplex& complex);

}  // namespace circlet
