#include "circlet/generators.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace circlet {

namespace {

std::string joined(std::initializer_list<int> parts) {
  std::string out;
  for (int p : parts) {
    if (!out.empty()) out += ":";
    out += std::to_string(p);
  }
  return out;
}

// Triangle walk over labels sorted in edge-id order: a -> b -> c -> a.
TwoComplex::FaceSpec triangle(const Id& a, const Id& b, const Id& c) {
  return {a + ":" + b + ":" + c,
          {{a + ":" + b, true}, {b + ":" + c, true}, {a + ":" + c, false}}};
}

}  // namespace

TwoComplex simplex_skeleton(int n) {
  if (n < 2) throw std::invalid_argument("simplex_skeleton: need n >= 2");

  std::vector<Id> vertices;
  for (int i = 1; i <= n + 1; ++i) vertices.push_back(std::to_string(i));

  std::vector<TwoComplex::EdgeSpec> edges;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      edges.push_back({joined({i, j}), std::to_string(i), std::to_string(j)});

  std::vector<TwoComplex::FaceSpec> faces;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      for (int k = j + 1; k <= n + 1; ++k)
        faces.push_back(
            triangle(std::to_string(i), std::to_string(j), std::to_string(k)));

  return TwoComplex::build(std::move(vertices), std::move(edges),
                           std::move(faces));
}

std::vector<FaceSubset> simplex_sphere_decomposition(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("simplex_sphere_decomposition: need odd n >= 3");

  TwoComplex skeleton = simplex_skeleton(n);
  int m = (n + 1) / 2;  // antipodal vertex pairs {2i-1, 2i}, i = 1..m

  std::vector<FaceSubset> parts;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k) {
        std::vector<Id> ids;
        for (int a : {2 * i - 1, 2 * i})
          for (int b : {2 * j - 1, 2 * j})
            for (int c : {2 * k - 1, 2 * k}) ids.push_back(joined({a, b, c}));
        parts.push_back(FaceSubset::of_ids(skeleton, ids));
      }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      std::vector<int> corners{2 * i - 1, 2 * i, 2 * j - 1, 2 * j};
      std::vector<Id> ids;
      for (std::size_t drop = 0; drop < corners.size(); ++drop) {
        std::vector<int> triple;
        for (std::size_t t = 0; t < corners.size(); ++t)
          if (t != drop) triple.push_back(corners[t]);
        ids.push_back(joined({triple[0], triple[1], triple[2]}));
      }
      parts.push_back(FaceSubset::of_ids(skeleton, ids));
    }
  return parts;
}

TwoComplex hypercube_skeleton(int n) {
  if (n < 2) throw std::invalid_argument("hypercube_skeleton: need n >= 2");

  std::vector<Id> vertices;
  for (unsigned long long v = 0; v < (1ull << n); ++v) {
    std::string s(n, '0');
    for (int b = 0; b < n; ++b)
      if (v & (1ull << (n - 1 - b))) s[b] = '1';
    vertices.push_back(s);
  }

  std::vector<TwoComplex::EdgeSpec> edges;
  for (const Id& s : vertices)
    for (int b = 0; b < n; ++b)
      if (s[b] == '0') {
        Id t = s;
        t[b] = '1';
        edges.push_back({s + ":" + t, s, t});
      }

  std::vector<TwoComplex::FaceSpec> faces;
  auto edge_between = [](const Id& u, const Id& v) {
    return u < v ? u + ":" + v : v + ":" + u;
  };
  for (const Id& s : vertices)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (s[p] != '0' || s[q] != '0') continue;
        Id c00 = s, c01 = s, c11 = s, c10 = s;
        c01[q] = '1';
        c11[p] = c11[q] = '1';
        c10[p] = '1';
        Id face_id = s;
        face_id[p] = face_id[q] = '*';
        std::vector<Id> cycle{c00, c01, c11, c10};
        TwoComplex::FaceSpec spec{face_id, {}};
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          const Id& from = cycle[i];
          const Id& to = cycle[(i + 1) % cycle.size()];
          spec.walk.emplace_back(edge_between(from, to), from < to);
        }
        faces.push_back(std::move(spec));
      }

  return TwoComplex::build(std::move(vertices), std::move(edges),
                           std::move(faces));
}

TwoComplex cross_polytope_skeleton(int n) {
  if (n < 3) throw std::invalid_argument("cross_polytope_skeleton: need n >= 3");

  std::vector<Id> vertices;
  for (int i = 1; i <= n; ++i) {
    vertices.push_back("+" + std::to_string(i));
    vertices.push_back("-" + std::to_string(i));
  }
  std::sort(vertices.begin(), vertices.end());

  std::vector<TwoComplex::EdgeSpec> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i].substr(1) == vertices[j].substr(1)) continue;  // antipodal
      edges.push_back({vertices[i] + ":" + vertices[j], vertices[i], vertices[j]});
    }

  std::vector<TwoComplex::FaceSpec> faces;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i].substr(1) == vertices[j].substr(1)) continue;
      for (std::size_t k = j + 1; k < vertices.size(); ++k) {
        if (vertices[i].substr(1) == vertices[k].substr(1) ||
            vertices[j].substr(1) == vertices[k].substr(1))
          continue;
        faces.push_back(triangle(vertices[i], vertices[j], vertices[k]));
      }
    }

  return TwoComplex::build(std::move(vertices), std::move(edges),
                           std::move(faces));
}

TwoComplex pinched_sphere() {
  std::vector<Id> vertices{"p", "q1", "q2", "q3", "q4"};

  std::vector<TwoComplex::EdgeSpec> edges;
  std::vector<Id> equator;
  for (int i = 1; i <= 4; ++i) {
    int j = i % 4 + 1;
    Id id = "q" + std::to_string(std::min(i, j)) + ":q" + std::to_string(std::max(i, j));
    edges.push_back({id, "q" + std::to_string(std::min(i, j)),
                     "q" + std::to_string(std::max(i, j))});
    equator.push_back(id);
  }
  for (int i = 1; i <= 4; ++i) {
    edges.push_back({"n" + std::to_string(i), "p", "q" + std::to_string(i)});
    edges.push_back({"s" + std::to_string(i), "p", "q" + std::to_string(i)});
  }

  // Triangle p -> q_i -> q_{i+1} -> p through the north or south spokes.
  std::vector<TwoComplex::FaceSpec> faces;
  for (char hemisphere : {'N', 'S'}) {
    std::string spoke = hemisphere == 'N' ? "n" : "s";
    for (int i = 1; i <= 4; ++i) {
      int j = i % 4 + 1;
      faces.push_back({std::string(1, hemisphere) + std::to_string(i),
                       {{spoke + std::to_string(i), true},
                        {equator[i - 1], i < 4},
                        {spoke + std::to_string(j), false}}});
    }
  }

  return TwoComplex::build(std::move(vertices), std::move(edges),
                           std::move(faces));
}

TwoComplex two_tetra_shared_edge() {
  std::vector<Id> vertices;
  for (int i = 1; i <= 6; ++i) vertices.push_back(std::to_string(i));

  std::set<std::pair<int, int>> pairs;
  std::vector<TwoComplex::FaceSpec> faces;
  for (std::vector<int> corners : {std::vector<int>{1, 2, 3, 4},
                                   std::vector<int>{1, 2, 5, 6}}) {
    for (std::size_t a = 0; a < corners.size(); ++a)
      for (std::size_t b = a + 1; b < corners.size(); ++b) {
        pairs.insert({corners[a], corners[b]});
        for (std::size_t c = b + 1; c < corners.size(); ++c)
          faces.push_back(triangle(std::to_string(corners[a]),
                                   std::to_string(corners[b]),
                                   std::to_string(corners[c])));
      }
  }

  std::vector<TwoComplex::EdgeSpec> edges;
  for (auto [i, j] : pairs)
    edges.push_back({joined({i, j}), std::to_string(i), std::to_string(j)});

  return TwoComplex::build(std::move(vertices), std::move(edges),
                           std::move(faces));
}

// ---- The tube-with-detached-square circlet ----

namespace {

// Gluing of one boundary 4-cycle onto the target cycle 1-2-3-4: cycle
// position i maps to vertex (offset + dir * i) mod 4, plus 1.
struct CycleGluing {
  int offset;
  int dir;  // +1 or -1
};

int glued_vertex(CycleGluing g, int pos) {
  int v = (g.offset + g.dir * pos) % 4;
  return (v % 4 + 4) % 4 + 1;
}

// The directed target cycle is a: 1->2, b: 2->3, c: 3->4, d: 4->1.
const char* letter_between(int x, int y) {
  static constexpr const char* names[4] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i) {
    int from = i + 1, to = i % 4 + 2 == 5 ? 1 : i + 2;
    if ((x == from && y == to) || (x == to && y == from)) return names[i];
  }
  assert(false && "letter edge endpoints are not cycle-adjacent");
  return nullptr;
}

TwoComplex build_tube_circlet(CycleGluing right, CycleGluing hole, int iso_dir) {
  constexpr int kRows = 4;        // circumference (cyclic)
  constexpr int kCols = 10;       // shaft length in squares
  constexpr int kHoleRow = 2;     // detached square
  constexpr int kHoleCol = 5;
  const CycleGluing left{0, 1};

  // Hole boundary cycle, counterclockwise from the square's lower-left.
  const std::pair<int, int> hole_corner[4] = {{kHoleRow, kHoleCol},
                                              {kHoleRow + 1, kHoleCol},
                                              {kHoleRow + 1, kHoleCol + 1},
                                              {kHoleRow, kHoleCol + 1}};

  auto pad2 = [](int c) {
    return (c < 10 ? "0" : "") + std::to_string(c);
  };
  auto vertex_name = [&](int r, int c) -> Id {
    r = (r % kRows + kRows) % kRows;
    if (c == 0) return std::to_string(glued_vertex(left, r));
    if (c == kCols) return std::to_string(glued_vertex(right, r));
    for (int i = 0; i < 4; ++i)
      if (hole_corner[i] == std::pair{r, c})
        return std::to_string(glued_vertex(hole, i));
    return "g" + std::to_string(r) + "x" + pad2(c);
  };

  std::map<Id, std::pair<Id, Id>> edge_ends;  // id -> (tail, head)
  auto add_edge = [&](const Id& id, const Id& tail, const Id& head) {
    auto [it, inserted] = edge_ends.emplace(id, std::pair{tail, head});
    if (!inserted) assert(it->second == std::pair{tail, head});
  };
  for (const char* l : {"a", "b", "c", "d"}) {
    int i = l[0] - 'a';
    add_edge(l, std::to_string(i + 1), std::to_string(i % 4 + 2 == 5 ? 1 : i + 2));
  }

  // Vertical edge (r,c)-(r+1,c); the rim columns and the hole's two
  // vertical sides are identified with target-cycle letters.
  auto vertical = [&](int r, int c) -> Id {
    r = (r % kRows + kRows) % kRows;
    if (c == 0)
      return letter_between(glued_vertex(left, r), glued_vertex(left, r + 1));
    if (c == kCols)
      return letter_between(glued_vertex(right, r), glued_vertex(right, r + 1));
    if (r == kHoleRow && c == kHoleCol)
      return letter_between(glued_vertex(hole, 0), glued_vertex(hole, 1));
    if (r == kHoleRow && c == kHoleCol + 1)
      return letter_between(glued_vertex(hole, 3), glued_vertex(hole, 2));
    Id id = "u" + std::to_string(r) + "x" + pad2(c);
    add_edge(id, vertex_name(r, c), vertex_name(r + 1, c));
    return id;
  };
  // Horizontal edge (r,c)-(r,c+1); the hole's top and bottom sides are
  // identified with letters.
  auto horizontal = [&](int r, int c) -> Id {
    r = (r % kRows + kRows) % kRows;
    if (r == kHoleRow && c == kHoleCol)
      return letter_between(glued_vertex(hole, 0), glued_vertex(hole, 3));
    if (r == kHoleRow + 1 && c == kHoleCol)
      return letter_between(glued_vertex(hole, 1), glued_vertex(hole, 2));
    Id id = "h" + std::to_string(r) + "x" + pad2(c);
    add_edge(id, vertex_name(r, c), vertex_name(r, c + 1));
    return id;
  };

  auto walk_step = [&](const Id& edge, const Id& from,
                       const Id& to) -> std::pair<Id, bool> {
    const auto& [tail, head] = edge_ends.at(edge);
    assert((from == tail && to == head) || (from == head && to == tail));
    return {edge, from == tail};
  };

  std::vector<TwoComplex::FaceSpec> faces;
  for (int r = 0; r < kRows; ++r)
    for (int c = 0; c < kCols; ++c) {
      if (r == kHoleRow && c == kHoleCol) continue;
      Id v00 = vertex_name(r, c), v01 = vertex_name(r, c + 1);
      Id v11 = vertex_name(r + 1, c + 1), v10 = vertex_name(r + 1, c);
      TwoComplex::FaceSpec spec{"f" + std::to_string(r) + "x" + pad2(c), {}};
      spec.walk.push_back(walk_step(horizontal(r, c), v00, v01));
      spec.walk.push_back(walk_step(vertical(r, c + 1), v01, v11));
      spec.walk.push_back(walk_step(horizontal(r + 1, c), v11, v10));
      spec.walk.push_back(walk_step(vertical(r, c), v10, v00));
      faces.push_back(std::move(spec));
    }

  // The detached square, traversing the target cycle directly.
  {
    CycleGluing iso{0, iso_dir};
    TwoComplex::FaceSpec spec{"fiso", {}};
    for (int i = 0; i < 4; ++i) {
      Id from = std::to_string(glued_vertex(iso, i));
      Id to = std::to_string(glued_vertex(iso, i + 1));
      spec.walk.push_back(walk_step(letter_between(glued_vertex(iso, i),
                                                   glued_vertex(iso, i + 1)),
                                    from, to));
    }
    faces.push_back(std::move(spec));
  }

  std::set<Id> vertex_set;
  for (const auto& [id, ends] : edge_ends) {
    vertex_set.insert(ends.first);
    vertex_set.insert(ends.second);
  }
  std::vector<Id> vertices(vertex_set.begin(), vertex_set.end());
  std::vector<TwoComplex::EdgeSpec> edges;
  for (const auto& [id, ends] : edge_ends)
    edges.push_back({id, ends.first, ends.second});

  return TwoComplex::build(std::move(vertices), std::move(edges),
                           std::move(faces));
}

}  // namespace

TwoComplex figure2_complex() {
  // Rim and hole orientations chosen so the 81-assignment census realizes
  // all eight covering surface types.
  return build_tube_circlet(CycleGluing{0, -1}, CycleGluing{0, 1}, 1);
}

std::map<std::string, TwoComplex> platonic_circlets() {
  std::map<std::string, TwoComplex> out;
  out.emplace("tetrahedron", simplex_skeleton(3));
  out.emplace("cube", hypercube_skeleton(3));
  out.emplace("octahedron", cross_polytope_skeleton(3));
  return out;
}

}  // namespace circlet
