#include "circlet/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "circlet/detail/disjoint_sets.hpp"

namespace circlet {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + std::move(message)),
      line_(line),
      column_(column) {}

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw std::invalid_argument(message);
}

std::optional<std::size_t> lookup(const std::map<Id, std::size_t>& index,
                                  const Id& id) {
  auto it = index.find(id);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

}  // namespace

TwoComplex TwoComplex::build(std::vector<Id> vertices,
                             std::vector<EdgeSpec> edges,
                             std::vector<FaceSpec> faces) {
  TwoComplex k;

  auto index_ids = [](std::vector<Id> ids, std::map<Id, std::size_t>& index,
                      const char* kind) {
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!index.emplace(ids[i], i).second)
        invalid(std::string("duplicate ") + kind + " id '" + ids[i] + "'");
    }
    return ids;
  };

  k.vertex_ids_ = index_ids(std::move(vertices), k.vertex_index_, "vertex");

  std::vector<Id> edge_ids;
  edge_ids.reserve(edges.size());
  for (const EdgeSpec& e : edges) edge_ids.push_back(e.id);
  k.edge_ids_ = index_ids(std::move(edge_ids), k.edge_index_, "edge");

  k.edges_.resize(edges.size());
  for (const EdgeSpec& e : edges) {
    auto tail = lookup(k.vertex_index_, e.tail);
    auto head = lookup(k.vertex_index_, e.head);
    if (!tail) invalid("edge '" + e.id + "' references unknown vertex '" + e.tail + "'");
    if (!head) invalid("edge '" + e.id + "' references unknown vertex '" + e.head + "'");
    if (*tail == *head)
      invalid("edge '" + e.id + "' endpoints must be distinct vertices");
    k.edges_[k.edge_index_.at(e.id)] = Edge{*tail, *head};
  }

  std::vector<Id> face_ids;
  face_ids.reserve(faces.size());
  for (const FaceSpec& f : faces) face_ids.push_back(f.id);
  k.face_ids_ = index_ids(std::move(face_ids), k.face_index_, "face");

  k.faces_.resize(faces.size());
  for (const FaceSpec& f : faces) {
    if (f.walk.size() < 3)
      invalid("face '" + f.id + "' must have at least 3 edges");
    std::vector<WalkStep> walk;
    walk.reserve(f.walk.size());
    std::set<std::size_t> seen_edges;
    for (const auto& [edge_id, forward] : f.walk) {
      auto e = lookup(k.edge_index_, edge_id);
      if (!e) invalid("face '" + f.id + "' references unknown edge '" + edge_id + "'");
      if (!seen_edges.insert(*e).second)
        invalid("face '" + f.id + "' repeats edge '" + edge_id + "'");
      walk.push_back(WalkStep{*e, forward});
    }
    std::set<std::size_t> seen_vertices;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const WalkStep& cur = walk[i];
      const WalkStep& next = walk[(i + 1) % walk.size()];
      if (k.step_end(cur) != k.step_start(next))
        invalid("face '" + f.id + "' walk does not close at step " +
                std::to_string(i + 1));
      if (!seen_vertices.insert(k.step_start(cur)).second)
        invalid("face '" + f.id + "' visits vertex '" +
                k.vertex_ids_[k.step_start(cur)] + "' twice");
    }
    k.faces_[k.face_index_.at(f.id)] = std::move(walk);
  }

  k.edge_faces_.resize(k.edges_.size());
  for (std::size_t f = 0; f < k.faces_.size(); ++f)
    for (const WalkStep& s : k.faces_[f]) k.edge_faces_[s.edge].push_back(f);

  return k;
}

std::optional<std::size_t> TwoComplex::find_vertex(const Id& id) const {
  return lookup(vertex_index_, id);
}
std::optional<std::size_t> TwoComplex::find_edge(const Id& id) const {
  return lookup(edge_index_, id);
}
std::optional<std::size_t> TwoComplex::find_face(const Id& id) const {
  return lookup(face_index_, id);
}

FaceSubset FaceSubset::all(std::size_t width) {
  FaceSubset s(width);
  s.bits_.set();
  return s;
}

FaceSubset FaceSubset::of_ids(const TwoComplex& complex,
                              std::span<const Id> ids) {
  FaceSubset s(complex.face_count());
  for (const Id& id : ids) {
    auto f = complex.find_face(id);
    if (!f) throw std::invalid_argument("unknown face id '" + id + "'");
    s.set(*f);
  }
  return s;
}

std::vector<Id> FaceSubset::ids(const TwoComplex& complex) const {
  std::vector<Id> out;
  for (std::size_t i = bits_.find_first(); i != npos; i = bits_.find_next(i))
    out.push_back(complex.face_ids()[i]);
  return out;
}

// ---- Text format ----
//
//   # comment to end of line
//   vertex <id>
//   edge <id> <tail-vertex> <head-vertex>
//   face <id> = <+-edge-id> <+-edge-id> ...
//
// `+e` traverses e tail->head, `-e` head->tail.

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      tokens.push_back(Token{raw.substr(start, i - start), line_no,
                             static_cast<int>(start) + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

[[noreturn]] void fail_at(const Token& t, const std::string& message) {
  throw ParseError(message, t.line, t.column);
}

void require_arity(const std::vector<Token>& line, std::size_t n,
                   const char* usage) {
  if (line.size() != n)
    fail_at(line[0], std::string("expected '") + usage + "'");
}

}  // namespace

TwoComplex parse_complex(const std::string& text) {
  std::vector<Id> vertices;
  std::vector<TwoComplex::EdgeSpec> edges;
  std::vector<TwoComplex::FaceSpec> faces;

  // Parser-level duplicate/reference checks so errors carry locations;
  // TwoComplex::build re-validates for programmatic construction.
  std::map<Id, std::size_t> vertex_ids, edge_ids, face_ids;
  std::map<Id, std::pair<Id, Id>> edge_ends;

  for (const auto& line : tokenize(text)) {
    const Token& head = line[0];
    if (head.text == "vertex") {
      require_arity(line, 2, "vertex <id>");
      if (!vertex_ids.emplace(line[1].text, 0).second)
        fail_at(line[1], "duplicate vertex id '" + line[1].text + "'");
      vertices.push_back(line[1].text);
    } else if (head.text == "edge") {
      require_arity(line, 4, "edge <id> <tail> <head>");
      if (!edge_ids.emplace(line[1].text, 0).second)
        fail_at(line[1], "duplicate edge id '" + line[1].text + "'");
      for (int i = 2; i <= 3; ++i)
        if (!vertex_ids.count(line[i].text))
          fail_at(line[i], "unknown vertex '" + line[i].text + "'");
      if (line[2].text == line[3].text)
        fail_at(line[2], "edge '" + line[1].text + "' endpoints must be distinct");
      edges.push_back({line[1].text, line[2].text, line[3].text});
      edge_ends[line[1].text] = {line[2].text, line[3].text};
    } else if (head.text == "face") {
      if (line.size() < 3 || line[2].text != "=")
        fail_at(head, "expected 'face <id> = <+-edge> ...'");
      if (!face_ids.emplace(line[1].text, 0).second)
        fail_at(line[1], "duplicate face id '" + line[1].text + "'");
      TwoComplex::FaceSpec spec;
      spec.id = line[1].text;
      std::set<Id> walk_edges;
      std::set<Id> walk_vertices;
      for (std::size_t i = 3; i < line.size(); ++i) {
        const Token& t = line[i];
        if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-'))
          fail_at(t, "expected '+<edge-id>' or '-<edge-id>'");
        bool forward = t.text[0] == '+';
        Id edge_id = t.text.substr(1);
        auto it = edge_ends.find(edge_id);
        if (it == edge_ends.end())
          fail_at(t, "unknown edge '" + edge_id + "'");
        if (!walk_edges.insert(edge_id).second)
          fail_at(t, "face '" + spec.id + "' repeats edge '" + edge_id + "'");
        spec.walk.emplace_back(edge_id, forward);
      }
      if (spec.walk.size() < 3)
        fail_at(head, "face '" + spec.id + "' must have at least 3 edges");
      auto step_ends = [&](std::size_t i) {
        const auto& [edge_id, forward] = spec.walk[i];
        const auto& [tail, head_v] = edge_ends.at(edge_id);
        return forward ? std::pair{tail, head_v} : std::pair{head_v, tail};
      };
      for (std::size_t i = 0; i < spec.walk.size(); ++i) {
        auto cur = step_ends(i);
        auto next = step_ends((i + 1) % spec.walk.size());
        if (cur.second != next.first)
          fail_at(line[3 + i], "face '" + spec.id + "' walk does not close here");
        if (!walk_vertices.insert(cur.first).second)
          fail_at(line[3 + i],
                  "face '" + spec.id + "' visits vertex '" + cur.first + "' twice");
      }
      faces.push_back(std::move(spec));
    } else {
      fail_at(head, "unknown directive '" + head.text + "'");
    }
  }

  return TwoComplex::build(std::move(vertices), std::move(edges),
                           std::move(faces));
}

std::string serialize_complex(const TwoComplex& complex) {
  std::ostringstream out;
  for (const Id& v : complex.vertex_ids()) out << "vertex " << v << "\n";
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    auto ends = complex.edge(e);
    out << "edge " << complex.edge_ids()[e] << " "
        << complex.vertex_ids()[ends.tail] << " "
        << complex.vertex_ids()[ends.head] << "\n";
  }
  for (std::size_t f = 0; f < complex.face_count(); ++f) {
    out << "face " << complex.face_ids()[f] << " =";
    for (const auto& step : complex.face(f))
      out << " " << (step.forward ? '+' : '-') << complex.edge_ids()[step.edge];
    out << "\n";
  }
  return out.str();
}

// ---- Degrees and connectivity ----

DegreeReport degrees(const TwoComplex& complex) {
  DegreeReport report;
  for (std::size_t e = 0; e < complex.edge_count(); ++e)
    report.edge_degrees[complex.edge_ids()[e]] = complex.edge_degree(e);
  std::vector<std::size_t> vertex_degree(complex.vertex_count(), 0);
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    ++vertex_degree[complex.edge(e).tail];
    ++vertex_degree[complex.edge(e).head];
  }
  for (std::size_t v = 0; v < complex.vertex_count(); ++v)
    report.vertex_degrees[complex.vertex_ids()[v]] = vertex_degree[v];
  return report;
}

std::optional<Id> first_uneven_edge(const TwoComplex& complex) {
  for (std::size_t e = 0; e < complex.edge_count(); ++e) {
    std::size_t d = complex.edge_degree(e);
    if (d == 0 || d % 2 != 0) return complex.edge_ids()[e];
  }
  return std::nullopt;
}

bool is_even(const TwoComplex& complex) {
  return !first_uneven_edge(complex).has_value();
}

bool is_connected(const TwoComplex& complex) {
  std::size_t nv = complex.vertex_count();
  std::size_t ne = complex.edge_count();
  std::size_t nf = complex.face_count();
  if (nv + ne + nf == 0)
    throw std::invalid_argument("is_connected: complex has no cells");

  detail::DisjointSets sets(nv + ne + nf);
  for (std::size_t e = 0; e < ne; ++e) {
    sets.unite(complex.edge(e).tail, nv + e);
    sets.unite(complex.edge(e).head, nv + e);
  }
  for (std::size_t f = 0; f < nf; ++f)
    for (const auto& step : complex.face(f)) sets.unite(nv + step.edge, nv + ne + f);
  return sets.component_count() == 1;
}

bool is_strongly_connected(const TwoComplex& complex) {
  std::size_t ne = complex.edge_count();
  std::size_t nf = complex.face_count();
  if (nf == 0)
    throw std::invalid_argument("is_strongly_connected: complex has no faces");

  for (std::size_t e = 0; e < ne; ++e)
    if (complex.edge_degree(e) == 0) return false;

  // Components of the complex minus its vertices are the components of the
  // edge-face incidence graph.
  detail::DisjointSets sets(ne + nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (const auto& step : complex.face(f)) sets.unite(step.edge, ne + f);
  return sets.component_count() == 1 && is_connected(complex);
}

TwoComplex subcomplex(const TwoComplex& complex, const FaceSubset& faces) {
  if (faces.width() != complex.face_count())
    throw std::invalid_argument("subcomplex: face subset width mismatch");
  if (!faces.any()) throw std::invalid_argument("subcomplex: empty face subset");

  std::set<std::size_t> edges, vertices;
  std::vector<TwoComplex::FaceSpec> face_specs;
  for (std::size_t f = faces.find_first(); f != FaceSubset::npos;
       f = faces.find_next(f)) {
    TwoComplex::FaceSpec spec;
    spec.id = complex.face_ids()[f];
    for (const auto& step : complex.face(f)) {
      edges.insert(step.edge);
      vertices.insert(complex.edge(step.edge).tail);
      vertices.insert(complex.edge(step.edge).head);
      spec.walk.emplace_back(complex.edge_ids()[step.edge], step.forward);
    }
    face_specs.push_back(std::move(spec));
  }

  std::vector<Id> vertex_ids;
  for (std::size_t v : vertices) vertex_ids.push_back(complex.vertex_ids()[v]);
  std::vector<TwoComplex::EdgeSpec> edge_specs;
  for (std::size_t e : edges)
    edge_specs.push_back({complex.edge_ids()[e],
                          complex.vertex_ids()[complex.edge(e).tail],
                          complex.vertex_ids()[complex.edge(e).head]});

  return TwoComplex::build(std::move(vertex_ids), std::move(edge_specs),
                           std::move(face_specs));
}

TwoComplex subcomplex(const TwoComplex& complex, std::span<const Id> face_ids) {
  return subcomplex(complex, FaceSubset::of_ids(complex, face_ids));
}

}  // namespace circlet
