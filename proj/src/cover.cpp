#include "circlet/cover.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

#include "circlet/detail/disjoint_sets.hpp"

namespace circlet {

// ---- Matching enumeration ----

namespace {

void matchings_rec(std::vector<std::size_t>& pool, Matching& current,
                   std::vector<Matching>& out) {
  if (pool.empty()) {
    out.push_back(current);
    return;
  }
  std::size_t first = pool.front();
  for (std::size_t i = 1; i < pool.size(); ++i) {
    std::size_t partner = pool[i];
    std::vector<std::size_t> rest;
    rest.reserve(pool.size() - 2);
    for (std::size_t j = 1; j < pool.size(); ++j)
      if (j != i) rest.push_back(pool[j]);
    current.emplace_back(first, partner);
    matchings_rec(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(std::size_t n) {
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument(
        "enumerate_matchings: need a positive even number of items, got " +
        std::to_string(n));
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<Matching> out;
  Matching current;
  matchings_rec(pool, current, out);
  return out;
}

std::vector<std::vector<std::pair<Id, Id>>> enumerate_matchings(
    std::span<const Id> faces) {
  std::vector<std::vector<std::pair<Id, Id>>> out;
  for (const Matching& m : enumerate_matchings(faces.size())) {
    std::vector<std::pair<Id, Id>> named;
    named.reserve(m.size());
    for (auto [i, j] : m) named.emplace_back(faces[i], faces[j]);
    out.push_back(std::move(named));
  }
  return out;
}

// ---- Assignments ----

namespace {

[[noreturn]] void require_even(const TwoComplex& complex, const char* who) {
  throw std::invalid_argument(std::string(who) + ": complex is not even (edge '" +
                              *first_uneven_edge(complex) + "')");
}

// Positions-to-faces relabeling; stored matchings keep pairs normalized
// and sorted so assignments compare canonically.
Matching mapped_matching(const Matching& positions,
                         const std::vector<std::size_t>& faces) {
  Matching m;
  m.reserve(positions.size());
  for (auto [i, j] : positions) {
    std::size_t a = faces[i];
    std::size_t b = faces[j];
    m.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(m.begin(), m.end());
  return m;
}

// Matchings available at one edge, optionally restricted to a grouping of
// the incident faces (faces glued only within their own group).
std::vector<Matching> edge_matchings(const std::vector<std::size_t>& faces) {
  std::vector<Matching> out;
  for (const Matching& m : enumerate_matchings(faces.size()))
    out.push_back(mapped_matching(m, faces));
  return out;
}

}  // namespace

GluingAssignment canonical_assignment(const TwoComplex& complex,
                                      std::span<const FaceSubset> decomposition) {
  if (!is_even(complex)) require_even(complex, "canonical_assignment");

  std::vector<std::size_t> part_of;  // face -> part index; npos if none given
  if (!decomposition.empty()) {
    part_of.assign(complex.face_count(), FaceSubset::npos);
    for (std::size_t p = 0; p < decomposition.size(); ++p) {
      const FaceSubset& part = decomposition[p];
      if (part.width() != complex.face_count())
        throw std::invalid_argument("canonical_assignment: part width mismatch");
      for (std::size_t f = part.find_first(); f != FaceSubset::npos;
           f = part.find_next(f)) {
        if (part_of[f] != FaceSubset::npos)
          throw std::invalid_argument(
              "canonical_assignment: decomposition parts overlap at face '" +
              complex.face_ids()[f] + "'");
        part_of[f] = p;
      }
    }
    for (std::size_t f = 0; f < complex.face_count(); ++f)
      if (part_of[f] == FaceSubset::npos)
        throw std::invalid_argument(
            "canonical_assignment: decomposition misses face '" +
            complex.face_ids()[f] + "'");
  }

  GluingAssignment assignment;
  assignment.matchings.resize(complex.edge_count());
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    const std::vector<std::size_t>& incident = complex.faces_of_edge(e);
    Matching m;
    if (decomposition.empty()) {
      // Pair consecutive faces in index order.
      for (std::size_t i = 0; i + 1 < incident.size(); i += 2)
        m.emplace_back(incident[i], incident[i + 1]);
    } else {
      std::vector<std::vector<std::size_t>> groups(decomposition.size());
      for (std::size_t f : incident) groups[part_of[f]].push_back(f);
      for (std::size_t p = 0; p < groups.size(); ++p) {
        if (groups[p].size() % 2 != 0)
          throw std::invalid_argument(
              "canonical_assignment: part " + std::to_string(p) +
              " has odd incidence count at edge '" + complex.edge_ids()[e] +
              "' (not an even decomposition)");
        for (std::size_t i = 0; i + 1 < groups[p].size(); i += 2)
          m.emplace_back(groups[p][i], groups[p][i + 1]);
      }
      std::sort(m.begin(), m.end());
    }
    assignment.matchings[e] = std::move(m);
  }
  return assignment;
}

boost::multiprecision::cpp_int assignment_count(const TwoComplex& complex) {
  if (!is_even(complex)) require_even(complex, "assignment_count");
  boost::multiprecision::cpp_int total = 1;
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    std::size_t deg = complex.edge_degree(e);
    for (std::size_t k = deg - 1; k > 1; k -= 2) total *= k;
  }
  return total;
}

// ---- Combinatorial surfaces ----

CombinatorialSurface::CombinatorialSurface(
    std::vector<std::string> face_ids, std::vector<std::vector<SurfaceStep>> walks,
    std::vector<Pairing> pairings)
    : face_ids_(std::move(face_ids)), walks_(std::move(walks)) {
  if (face_ids_.size() != walks_.size())
    throw std::invalid_argument("surface: face id / walk count mismatch");

  corner_offset_.resize(walks_.size() + 1);
  corner_offset_[0] = 0;
  for (std::size_t f = 0; f < walks_.size(); ++f)
    corner_offset_[f + 1] = corner_offset_[f] + walks_[f].size();
  std::size_t total = corner_offset_.back();

  std::vector<int> covered(total, 0);
  for (Pairing& p : pairings) {
    if (p.b < p.a) std::swap(p.a, p.b);
    for (const PositionRef& r : {p.a, p.b}) {
      if (r.face >= walks_.size() || r.pos >= walks_[r.face].size())
        throw std::invalid_argument("surface: pairing position out of range");
      ++covered[corner_offset_[r.face] + r.pos];
    }
    if (walks_[p.a.face][p.a.pos].edge != walks_[p.b.face][p.b.pos].edge)
      throw std::invalid_argument(
          "surface: pairing joins different edge labels '" +
          walks_[p.a.face][p.a.pos].edge + "' and '" +
          walks_[p.b.face][p.b.pos].edge + "'");
  }
  for (std::size_t f = 0; f < walks_.size(); ++f)
    for (std::size_t i = 0; i < walks_[f].size(); ++i)
      if (covered[corner_offset_[f] + i] != 1)
        throw std::invalid_argument(
            "surface: position " + std::to_string(i) + " of face '" +
            face_ids_[f] + "' is covered " +
            std::to_string(covered[corner_offset_[f] + i]) + " times");
  std::sort(pairings.begin(), pairings.end());
  pairings_ = std::move(pairings);

  // Corner before position p; gluing identifies tail corners and head
  // corners of the two sides (both project onto the same labeled edge).
  detail::DisjointSets sets(total);
  auto corner = [&](std::size_t face, std::size_t pos) {
    return corner_offset_[face] + pos;
  };
  auto next_corner = [&](std::size_t face, std::size_t pos) {
    return corner(face, (pos + 1) % walks_[face].size());
  };
  for (const Pairing& p : pairings_) {
    bool fa = walks_[p.a.face][p.a.pos].forward;
    bool fb = walks_[p.b.face][p.b.pos].forward;
    std::size_t a_tail = fa ? corner(p.a.face, p.a.pos) : next_corner(p.a.face, p.a.pos);
    std::size_t a_head = fa ? next_corner(p.a.face, p.a.pos) : corner(p.a.face, p.a.pos);
    std::size_t b_tail = fb ? corner(p.b.face, p.b.pos) : next_corner(p.b.face, p.b.pos);
    std::size_t b_head = fb ? next_corner(p.b.face, p.b.pos) : corner(p.b.face, p.b.pos);
    sets.unite(a_tail, b_tail);
    sets.unite(a_head, b_head);
  }

  corner_orbit_.assign(total, total);
  std::vector<std::size_t> orbit_of_root(total, total);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t root = sets.find(c);
    if (orbit_of_root[root] == total) orbit_of_root[root] = orbit_count_++;
    corner_orbit_[c] = orbit_of_root[root];
  }
}

std::size_t CombinatorialSurface::corner_orbit(std::size_t face,
                                               std::size_t pos) const {
  return corner_orbit_[corner_offset_[face] + pos];
}

int euler_characteristic(const CombinatorialSurface& surface) {
  return static_cast<int>(surface.vertex_count()) -
         static_cast<int>(surface.edge_count()) +
         static_cast<int>(surface.face_count());
}

std::vector<std::vector<std::size_t>> components(
    const CombinatorialSurface& surface) {
  detail::DisjointSets sets(surface.face_count());
  for (const Pairing& p : surface.pairings()) sets.unite(p.a.face, p.b.face);

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t f = 0; f < surface.face_count(); ++f)
    by_root[sets.find(f)].push_back(f);

  std::vector<std::vector<std::size_t>> out;
  out.reserve(by_root.size());
  for (auto& [root, faces] : by_root) out.push_back(std::move(faces));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<bool> is_orientable(const CombinatorialSurface& surface) {
  // 2-coloring: flipping a face reverses its walk, so a pairing whose two
  // traversals run the same way forces exactly one flip.
  std::vector<std::vector<std::pair<std::size_t, bool>>> constraints(
      surface.face_count());
  for (const Pairing& p : surface.pairings()) {
    bool same_direction = surface.walks()[p.a.face][p.a.pos].forward ==
                          surface.walks()[p.b.face][p.b.pos].forward;
    constraints[p.a.face].emplace_back(p.b.face, same_direction);
    constraints[p.b.face].emplace_back(p.a.face, same_direction);
  }

  std::vector<int> flip(surface.face_count(), -1);
  std::vector<bool> out;
  for (const auto& comp : components(surface)) {
    bool ok = true;
    flip[comp.front()] = 0;
    std::vector<std::size_t> queue{comp.front()};
    while (!queue.empty()) {
      std::size_t f = queue.back();
      queue.pop_back();
      for (auto [g, same] : constraints[f]) {
        int expected = flip[f] ^ (same ? 1 : 0);
        if (flip[g] == -1) {
          flip[g] = expected;
          queue.push_back(g);
        } else if (flip[g] != expected) {
          ok = false;
        }
      }
    }
    out.push_back(ok);
  }
  return out;
}

SurfaceType SurfaceType::from(int chi, bool orientable) {
  if (orientable && (chi > 2 || chi % 2 != 0))
    throw std::invalid_argument("no orientable closed surface has chi = " +
                                std::to_string(chi));
  if (!orientable && chi > 1)
    throw std::invalid_argument("no non-orientable closed surface has chi = " +
                                std::to_string(chi));
  SurfaceType t;
  t.euler_characteristic = chi;
  t.orientable = orientable;
  return t;
}

std::string SurfaceType::symbol() const {
  return orientable ? "S" + std::to_string(genus())
                    : "N" + std::to_string(cross_caps());
}

std::string SurfaceType::name() const {
  if (orientable) {
    switch (genus()) {
      case 0: return "sphere";
      case 1: return "torus";
      case 2: return "double torus";
      case 3: return "triple torus";
      default: return "genus-" + std::to_string(genus()) + " surface";
    }
  }
  switch (cross_caps()) {
    case 1: return "projective plane";
    case 2: return "Klein bottle";
    default:
      return "sphere with " + std::to_string(cross_caps()) + " cross-caps";
  }
}

std::string SurfaceType::display() const { return name() + " (" + symbol() + ")"; }

std::vector<SurfaceType> classify(const CombinatorialSurface& surface) {
  auto comps = components(surface);
  auto orientable = is_orientable(surface);

  std::vector<std::size_t> comp_of(surface.face_count());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t f : comps[c]) comp_of[f] = c;

  std::vector<std::size_t> q(comps.size(), 0);
  for (const Pairing& p : surface.pairings()) ++q[comp_of[p.a.face]];

  std::vector<SurfaceType> out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::set<std::size_t> orbits;
    for (std::size_t f : comps[c])
      for (std::size_t i = 0; i < surface.walks()[f].size(); ++i)
        orbits.insert(surface.corner_orbit(f, i));
    int chi = static_cast<int>(orbits.size()) - static_cast<int>(q[c]) +
              static_cast<int>(comps[c].size());
    out.push_back(SurfaceType::from(chi, orientable[c]));
  }
  return out;
}

// ---- Cover construction ----

namespace {

void validate_assignment(const TwoComplex& complex,
                         const GluingAssignment& assignment) {
  if (assignment.matchings.size() != complex.edge_count())
    throw std::invalid_argument("assignment: matching count " +
                                std::to_string(assignment.matchings.size()) +
                                " != edge count " +
                                std::to_string(complex.edge_count()));
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    const std::vector<std::size_t>& incident = complex.faces_of_edge(e);
    std::vector<std::size_t> matched;
    for (auto [f, g] : assignment.matchings[e]) {
      if (f == g)
        throw std::invalid_argument("assignment: edge '" + complex.edge_ids()[e] +
                                    "' pairs face '" + complex.face_ids()[f] +
                                    "' with itself");
      matched.push_back(f);
      matched.push_back(g);
    }
    std::sort(matched.begin(), matched.end());
    if (matched != incident)
      throw std::invalid_argument(
          "assignment: matching at edge '" + complex.edge_ids()[e] +
          "' does not cover its incident faces exactly once");
  }
}

}  // namespace

CoverMap build_cover(const TwoComplex& complex,
                     const GluingAssignment& assignment) {
  if (!is_even(complex)) require_even(complex, "build_cover");
  validate_assignment(complex, assignment);

  std::vector<std::vector<SurfaceStep>> walks(complex.face_count());
  std::vector<std::map<std::size_t, std::size_t>> edge_pos(complex.face_count());
  for (std::size_t f = 0; f < complex.face_count(); ++f) {
    const auto& walk = complex.face(f);
    walks[f].reserve(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i) {
      walks[f].push_back(SurfaceStep{complex.edge_ids()[walk[i].edge],
                                     walk[i].forward});
      edge_pos[f][walk[i].edge] = i;
    }
  }

  std::vector<Pairing> pairings;
  for (std::size_t e = 0; e < complex.edge_count(); ++e)
    for (auto [f, g] : assignment.matchings[e])
      pairings.push_back(Pairing{{f, edge_pos[f].at(e)}, {g, edge_pos[g].at(e)}});

  CoverMap cover{complex,
                 CombinatorialSurface(complex.face_ids(), std::move(walks),
                                      std::move(pairings)),
                 {}, {}, {}};

  cover.face_map.resize(complex.face_count());
  std::iota(cover.face_map.begin(), cover.face_map.end(), std::size_t{0});

  cover.edge_map.reserve(cover.surface.edge_count());
  for (const Pairing& p : cover.surface.pairings()) {
    const std::string& label = cover.surface.walks()[p.a.face][p.a.pos].edge;
    cover.edge_map.push_back(*complex.find_edge(label));
  }

  cover.vertex_map.assign(cover.surface.vertex_count(), complex.vertex_count());
  for (std::size_t f = 0; f < complex.face_count(); ++f) {
    const auto& walk = complex.face(f);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      std::size_t orbit = cover.surface.corner_orbit(f, i);
      if (cover.vertex_map[orbit] == complex.vertex_count())
        cover.vertex_map[orbit] = complex.step_start(walk[i]);
    }
  }
  return cover;
}

VerificationReport verify_cover(const CoverMap& cover) {
  const TwoComplex& base = cover.base;
  const CombinatorialSurface& surface = cover.surface;
  auto fail = [](std::string why) { return VerificationReport{false, std::move(why)}; };

  // Each base face covered by exactly one surface face.
  if (cover.face_map.size() != surface.face_count())
    return fail("face map size does not match the surface");
  std::vector<std::size_t> covered(base.face_count(), 0);
  for (std::size_t b : cover.face_map) {
    if (b >= base.face_count()) return fail("face map target out of range");
    ++covered[b];
  }
  for (std::size_t b = 0; b < base.face_count(); ++b) {
    if (covered[b] == 2)
      return fail("base face '" + base.face_ids()[b] + "' is covered twice");
    if (covered[b] != 1)
      return fail("base face '" + base.face_ids()[b] + "' is covered " +
                  std::to_string(covered[b]) + " times");
  }

  // Walks commute with the projection cell-by-cell.
  for (std::size_t f = 0; f < surface.face_count(); ++f) {
    const auto& walk = surface.walks()[f];
    const auto& base_walk = base.face(cover.face_map[f]);
    if (walk.size() != base_walk.size())
      return fail("surface face '" + surface.face_ids()[f] +
                  "' walk length differs from its base face");
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i].edge != base.edge_ids()[base_walk[i].edge] ||
          walk[i].forward != base_walk[i].forward)
        return fail("surface face '" + surface.face_ids()[f] +
                    "' walk does not project onto its base face");
  }

  // Edge map: labels agree and a degree-2k edge has exactly k preimages.
  if (cover.edge_map.size() != surface.edge_count())
    return fail("edge map size does not match the surface");
  std::vector<std::size_t> edge_preimages(base.edge_count(), 0);
  for (std::size_t i = 0; i < surface.pairings().size(); ++i) {
    const Pairing& p = surface.pairings()[i];
    std::size_t e = cover.edge_map[i];
    if (e >= base.edge_count()) return fail("edge map target out of range");
    if (surface.walks()[p.a.face][p.a.pos].edge != base.edge_ids()[e] ||
        surface.walks()[p.b.face][p.b.pos].edge != base.edge_ids()[e])
      return fail("pairing label does not match its mapped edge '" +
                  base.edge_ids()[e] + "'");
    ++edge_preimages[e];
  }
  for (std::size_t e = 0; e < base.edge_count(); ++e)
    if (edge_preimages[e] != base.edge_degree(e) / 2)
      return fail("edge '" + base.edge_ids()[e] + "' has " +
                  std::to_string(edge_preimages[e]) + " preimages, expected " +
                  std::to_string(base.edge_degree(e) / 2));

  // Vertex map: every corner of every surface face sits over the vertex
  // its base corner names.
  if (cover.vertex_map.size() != surface.vertex_count())
    return fail("vertex map size does not match the surface");
  for (std::size_t f = 0; f < surface.face_count(); ++f) {
    const auto& base_walk = base.face(cover.face_map[f]);
    for (std::size_t i = 0; i < base_walk.size(); ++i) {
      std::size_t orbit = surface.corner_orbit(f, i);
      if (cover.vertex_map[orbit] != base.step_start(base_walk[i]))
        return fail("corner " + std::to_string(i) + " of surface face '" +
                    surface.face_ids()[f] + "' projects to the wrong vertex");
    }
  }

  // Global counts.
  std::size_t half_degree_sum = 0;
  for (std::size_t e = 0; e < base.edge_count(); ++e)
    half_degree_sum += base.edge_degree(e) / 2;
  if (surface.edge_count() != half_degree_sum)
    return fail("surface edge count differs from half the total edge degree");
  if (surface.face_count() != base.face_count())
    return fail("surface face count differs from the base face count");

  return VerificationReport{};
}

// ---- Census ----

CensusLimitError::CensusLimitError(boost::multiprecision::cpp_int count,
                                   std::uint64_t limit)
    : std::runtime_error("census: " + count.str() +
                         " assignments exceed the limit of " +
                         std::to_string(limit)),
      count_(std::move(count)) {}

namespace {

std::vector<std::vector<Matching>> per_edge_matchings(const TwoComplex& complex) {
  std::vector<std::vector<Matching>> out(complex.edge_count());
  for (std::size_t e = 0; e < complex.edge_count(); ++e)
    out[e] = edge_matchings(complex.faces_of_edge(e));
  return out;
}

GluingAssignment assignment_from_digits(
    const std::vector<std::vector<Matching>>& options, std::uint64_t index) {
  GluingAssignment a;
  a.matchings.reserve(options.size());
  for (const std::vector<Matching>& choice : options) {
    a.matchings.push_back(choice[index % choice.size()]);
    index /= choice.size();
  }
  return a;
}

void tally(const TwoComplex& complex, const GluingAssignment& assignment,
           CensusResult& result) {
  CoverMap cover = build_cover(complex, assignment);
  std::vector<std::string> symbols;
  for (const SurfaceType& t : classify(cover.surface))
    symbols.push_back(t.symbol());
  std::sort(symbols.begin(), symbols.end());
  std::string key;
  for (std::size_t i = 0; i < symbols.size(); ++i)
    key += (i ? "+" : "") + symbols[i];
  ++result.histogram[key];

  std::size_t p = cover.surface.vertex_count();
  result.min_p = std::min(result.min_p, p);
  result.max_p = std::max(result.max_p, p);
}

}  // namespace

GluingAssignment assignment_at(const TwoComplex& complex, std::uint64_t index) {
  if (!is_even(complex)) require_even(complex, "assignment_at");
  return assignment_from_digits(per_edge_matchings(complex), index);
}

CensusResult census(const TwoComplex& complex, std::uint64_t limit,
                    unsigned jobs) {
  boost::multiprecision::cpp_int total = assignment_count(complex);
  if (total > limit) throw CensusLimitError(total, limit);
  std::uint64_t n = total.convert_to<std::uint64_t>();

  auto options = per_edge_matchings(complex);
  auto run_range = [&](std::uint64_t first, std::uint64_t stride) {
    CensusResult local;
    local.min_p = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t i = first; i < n; i += stride)
      tally(complex, assignment_from_digits(options, i), local);
    return local;
  };

  std::vector<CensusResult> partials(std::max(jobs, 1u));
  if (jobs <= 1) {
    partials[0] = run_range(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] { partials[w] = run_range(w, jobs); });
    for (std::thread& t : workers) t.join();
  }

  // Merge in worker order; counts are order-independent.
  CensusResult result;
  result.assignment_total = total;
  result.min_p = std::numeric_limits<std::size_t>::max();
  for (const CensusResult& part : partials) {
    for (const auto& [key, count] : part.histogram) result.histogram[key] += count;
    result.min_p = std::min(result.min_p, part.min_p);
    result.max_p = std::max(result.max_p, part.max_p);
  }
  if (result.min_p == std::numeric_limits<std::size_t>::max()) result.min_p = 0;
  return result;
}

}  // namespace circlet
