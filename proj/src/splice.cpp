#include "circlet/splice.hpp"

#include <algorithm>

#include "circlet/gf2.hpp"

namespace circlet {

std::optional<SpliceSite> find_splice_edge(
    const TwoComplex& complex, const GluingAssignment& assignment,
    const std::vector<std::vector<std::size_t>>& component_faces) {
  if (component_faces.size() <= 1) return std::nullopt;

  std::vector<std::size_t> comp_of(complex.face_count());
  for (std::size_t c = 0; c < component_faces.size(); ++c)
    for (std::size_t f : component_faces[c]) comp_of[f] = c;

  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    const Matching& m = assignment.matchings[e];
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (comp_of[m[i].first] != comp_of[m[j].first])
          return SpliceSite{e, m[i], m[j]};
  }
  throw std::logic_error(
      "find_splice_edge: several components but no cross-component edge; "
      "the base complex is not strongly connected");
}

GluingAssignment splice(const GluingAssignment& assignment, std::size_t edge,
                        std::pair<std::size_t, std::size_t> p1,
                        std::pair<std::size_t, std::size_t> p2) {
  if (edge >= assignment.matchings.size())
    throw std::invalid_argument("splice: edge index out of range");

  auto normalized = [](std::pair<std::size_t, std::size_t> p) {
    return std::pair{std::min(p.first, p.second), std::max(p.first, p.second)};
  };
  if (normalized(p1) == normalized(p2))
    throw std::invalid_argument("splice: the two pairs must be distinct");

  GluingAssignment out = assignment;
  Matching& m = out.matchings[edge];
  for (auto p : {p1, p2}) {
    auto it = std::find(m.begin(), m.end(), normalized(p));
    if (it == m.end())
      throw std::invalid_argument("splice: pair is not in the matching");
    m.erase(it);
  }
  m.push_back(normalized({p1.first, p2.first}));
  m.push_back(normalized({p1.second, p2.second}));
  std::sort(m.begin(), m.end());
  return out;
}

EulerCoverResult euler_cover(const TwoComplex& complex) {
  if (!is_even(complex))
    throw std::invalid_argument("euler_cover: complex is not even (edge '" +
                                *first_uneven_edge(complex) + "')");
  if (!is_strongly_connected(complex))
    throw std::invalid_argument("euler_cover: complex is not strongly connected");

  std::vector<FaceSubset> parts = circlet_decomposition(complex);
  GluingAssignment assignment = canonical_assignment(complex, parts);
  CoverMap cover = build_cover(complex, assignment);

  std::vector<SpliceStep> trace;
  auto comps = components(cover.surface);
  while (comps.size() > 1) {
    SpliceSite site = *find_splice_edge(complex, assignment, comps);
    assignment = splice(assignment, site.edge, site.pair1, site.pair2);
    cover = build_cover(complex, assignment);
    comps = components(cover.surface);

    const auto& face_ids = complex.face_ids();
    trace.push_back(SpliceStep{
        complex.edge_ids()[site.edge],
        {face_ids[site.pair1.first], face_ids[site.pair1.second]},
        {face_ids[site.pair2.first], face_ids[site.pair2.second]},
        comps.size(),
        euler_characteristic(cover.surface)});
  }
  return EulerCoverResult{std::move(cover), std::move(trace)};
}

}  // namespace circlet
