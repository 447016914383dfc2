#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circlet/complex.hpp"

namespace circlet {

// A perfect matching on an index range, as normalized (first < second)
// pairs in sorted order.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

// All perfect matchings of {0, .., n-1} in deterministic order: element 0
// is paired with each later element in turn, recursing on the rest.
// Count is (n-1)!!.  Throws std::invalid_argument for odd n.
std::vector<Matching> enumerate_matchings(std::size_t n);

// Id-level convenience: matchings of an ordered list of face ids.
std::vector<std::vector<std::pair<Id, Id>>> enumerate_matchings(
    std::span<const Id> faces);

// For each edge, a perfect matching on the faces incident to it (the
// per-edge gluing functions).  Face pairs are complex face indices.
struct GluingAssignment {
  std::vector<Matching> matchings;  // indexed by edge

  bool operator==(const GluingAssignment&) const = default;
};

// First enumerated matching per edge; with a decomposition, faces are
// matched only within their own part.  Throws std::invalid_argument if the
// complex is not even, the decomposition is not a partition of the faces,
// or some part has an odd per-edge incidence count.
GluingAssignment canonical_assignment(
    const TwoComplex& complex,
    std::span<const FaceSubset> decomposition = {});

// Number of gluing assignments, prod over edges of (deg(e)-1)!!, exact.
boost::multiprecision::cpp_int assignment_count(const TwoComplex& complex);

// One step of a surface face boundary walk, labeled by the edge it covers.
struct SurfaceStep {
  std::string edge;
  bool forward;

  bool operator==(const SurfaceStep&) const = default;
};

struct PositionRef {
  std::size_t face;
  std::size_t pos;

  auto operator<=>(const PositionRef&) const = default;
};

// An unordered gluing of two walk positions carrying the same edge label.
struct Pairing {
  PositionRef a;
  PositionRef b;

  auto operator<=>(const Pairing&) const = default;
};

// A closed surface given combinatorially: polygon boundary walks plus a
// perfect matching (pairings) on walk positions.  Vertices are corner
// orbits: the corner before position p of face f is glued, through every
// pairing, tail-to-tail and head-to-head with its partner corners, so each
// corner has exactly two links and every orbit is a single cycle (a disk
// neighborhood).  Corner orbits of one face may coincide; faces here need
// not be embedded.
class CombinatorialSurface {
 public:
  // Validates that the pairings cover every walk position exactly once and
  // join equal labels; throws std::invalid_argument otherwise.  Pairings
  // are stored in normalized sorted order.
  CombinatorialSurface(std::vector<std::string> face_ids,
                       std::vector<std::vector<SurfaceStep>> walks,
                       std::vector<Pairing> pairings);

  std::size_t face_count() const { return walks_.size(); }
  std::size_t edge_count() const { return pairings_.size(); }
  std::size_t vertex_count() const { return orbit_count_; }

  const std::vector<std::string>& face_ids() const { return face_ids_; }
  const std::vector<std::vector<SurfaceStep>>& walks() const { return walks_; }
  const std::vector<Pairing>& pairings() const { return pairings_; }

  // Orbit index of the corner at the start of walk position (face, pos);
  // orbits are numbered by first occurrence in face-major order.
  std::size_t corner_orbit(std::size_t face, std::size_t pos) const;

 private:
  std::vector<std::string> face_ids_;
  std::vector<std::vector<SurfaceStep>> walks_;
  std::vector<Pairing> pairings_;
  std::vector<std::size_t> corner_offset_;  // face -> first flat corner index
  std::vector<std::size_t> corner_orbit_;   // flat corner index -> orbit
  std::size_t orbit_count_ = 0;
};

// p - q + r; additive over components.
int euler_characteristic(const CombinatorialSurface& surface);

// Face index partition under pairing adjacency; components ordered by
// smallest face index, faces sorted within each.
std::vector<std::vector<std::size_t>> components(
    const CombinatorialSurface& surface);

// Per component (aligned with components()): true iff faces admit flips
// making every pairing join oppositely directed traversals.
std::vector<bool> is_orientable(const CombinatorialSurface& surface);

// A closed surface up to homeomorphism.
struct SurfaceType {
  bool connected = true;
  int euler_characteristic = 2;
  bool orientable = true;

  // Consistency-checked constructor: orientable needs even chi <= 2,
  // non-orientable needs chi <= 1.
  static SurfaceType from(int chi, bool orientable);

  int genus() const { return (2 - euler_characteristic) / 2; }
  int cross_caps() const { return 2 - euler_characteristic; }

  std::string symbol() const;   // "S<genus>" or "N<cross-caps>"
  std::string name() const;     // "sphere", "torus", "Klein bottle", ...
  std::string display() const;  // "triple torus (S3)"

  bool operator==(const SurfaceType&) const = default;
};

// Homeomorphism type of each component, aligned with components().
std::vector<SurfaceType> classify(const CombinatorialSurface& surface);

// A cellular projection from a combinatorial surface onto a 2-complex,
// covering each base face exactly once.
struct CoverMap {
  TwoComplex base;
  CombinatorialSurface surface;
  std::vector<std::size_t> face_map;    // surface face index -> base face index
  std::vector<std::size_t> edge_map;    // pairing index -> base edge index
  std::vector<std::size_t> vertex_map;  // corner orbit -> base vertex index
};

// Cuts the complex apart along its edges and re-glues two faces per edge
// as directed by the assignment.  Requires an even complex and an
// assignment whose matchings cover each edge's incident faces exactly
// once; throws std::invalid_argument otherwise.
CoverMap build_cover(const TwoComplex& complex, const GluingAssignment& assignment);

struct VerificationReport {
  bool ok = true;
  std::string violation;  // first violated invariant when not ok
};

// Checks the cover invariants: the face bijection, walk commutation, the
// deg/2 preimage rule per edge, and vertex/edge map consistency.
VerificationReport verify_cover(const CoverMap& cover);

// Thrown by census when the number of assignments exceeds the limit.
class CensusLimitError : public std::runtime_error {
 public:
  CensusLimitError(boost::multiprecision::cpp_int count, std::uint64_t limit);
  const boost::multiprecision::cpp_int& count() const { return count_; }

 private:
  boost::multiprecision::cpp_int count_;
};

struct CensusResult {
  boost::multiprecision::cpp_int assignment_total;
  // Outcome key: per-component type symbols, sorted and joined with '+'.
  std::map<std::string, std::uint64_t> histogram;
  std::size_t min_p = 0;
  std::size_t max_p = 0;
};

// Builds the cover of every gluing assignment (mixed-radix iteration over
// per-edge matching indices, edges in id order) and tallies the outcomes.
CensusResult census(const TwoComplex& complex, std::uint64_t limit = 1'000'000,
                    unsigned jobs = 1);

// Assignment for a mixed-radix census index; index 0 is the canonical
// assignment.  Exposed for partitioned runs and tests.
GluingAssignment assignment_at(const TwoComplex& complex, std::uint64_t index);

}  // namespace circlet
