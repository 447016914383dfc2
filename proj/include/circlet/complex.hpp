#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace circlet {

// Cell identifiers are opaque strings, preserved verbatim from input.
// Every deterministic ordering in the library is lexicographic id order.
using Id = std::string;

// Thrown by parse_complex / parse_surface / parse_assignment; 1-based
// line and column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An immutable polygonal 2-complex: vertices, edges with distinct
// endpoints, and faces given as directed closed edge walks of length >= 3.
// Walks may not repeat an edge or visit a vertex twice.  Parallel edges
// (same endpoints, distinct ids) are allowed; cells not incident to any
// face are allowed.
class TwoComplex {
 public:
  struct Edge {
    std::size_t tail;
    std::size_t head;
  };

  // One step of a face walk: `forward` means traversal tail -> head.
  struct WalkStep {
    std::size_t edge;
    bool forward;

    bool operator==(const WalkStep&) const = default;
  };

  struct EdgeSpec {
    Id id;
    Id tail;
    Id head;
  };

  struct FaceSpec {
    Id id;
    std::vector<std::pair<Id, bool>> walk;
  };

  // Validates all invariants; throws std::invalid_argument naming the
  // offending cell on failure.
  static TwoComplex build(std::vector<Id> vertices, std::vector<EdgeSpec> edges,
                          std::vector<FaceSpec> faces);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edge_ids_.size(); }
  std::size_t face_count() const { return face_ids_.size(); }

  // Ids in sorted order; index positions match the accessors below.
  const std::vector<Id>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Id>& edge_ids() const { return edge_ids_; }
  const std::vector<Id>& face_ids() const { return face_ids_; }

  Edge edge(std::size_t e) const { return edges_[e]; }
  const std::vector<WalkStep>& face(std::size_t f) const { return faces_[f]; }

  std::optional<std::size_t> find_vertex(const Id& id) const;
  std::optional<std::size_t> find_edge(const Id& id) const;
  std::optional<std::size_t> find_face(const Id& id) const;

  // Faces containing edge e, in increasing face index order.
  const std::vector<std::size_t>& faces_of_edge(std::size_t e) const {
    return edge_faces_[e];
  }
  std::size_t edge_degree(std::size_t e) const { return edge_faces_[e].size(); }

  // Vertex at the start / end of a walk step.
  std::size_t step_start(const WalkStep& s) const {
    return s.forward ? edges_[s.edge].tail : edges_[s.edge].head;
  }
  std::size_t step_end(const WalkStep& s) const {
    return s.forward ? edges_[s.edge].head : edges_[s.edge].tail;
  }

 private:
  TwoComplex() = default;

  std::vector<Id> vertex_ids_;
  std::vector<Id> edge_ids_;
  std::vector<Id> face_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<WalkStep>> faces_;
  std::vector<std::vector<std::size_t>> edge_faces_;
  std::map<Id, std::size_t> vertex_index_;
  std::map<Id, std::size_t> edge_index_;
  std::map<Id, std::size_t> face_index_;
};

// A subset of a complex's faces as a bit vector over the face index set
// (bit i = face_ids()[i]).
class FaceSubset {
 public:
  FaceSubset() = default;
  explicit FaceSubset(std::size_t width) : bits_(width) {}

  static FaceSubset all(std::size_t width);
  // Throws std::invalid_argument on an unknown face id.
  static FaceSubset of_ids(const TwoComplex& complex, std::span<const Id> ids);

  std::size_t width() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool any() const { return bits_.any(); }
  bool test(std::size_t i) const { return bits_.test(i); }
  void set(std::size_t i, bool value = true) { bits_.set(i, value); }

  // Lowest set face index, or npos if empty.
  static constexpr std::size_t npos = boost::dynamic_bitset<>::npos;
  std::size_t find_first() const { return bits_.find_first(); }
  std::size_t find_next(std::size_t i) const { return bits_.find_next(i); }

  bool is_subset_of(const FaceSubset& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool is_proper_subset_of(const FaceSubset& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }

  FaceSubset& operator^=(const FaceSubset& other) {
    bits_ ^= other.bits_;
    return *this;
  }
  friend FaceSubset operator^(FaceSubset a, const FaceSubset& b) {
    a ^= b;
    return a;
  }
  FaceSubset operator&(const FaceSubset& other) const {
    FaceSubset r = *this;
    r.bits_ &= other.bits_;
    return r;
  }
  bool operator==(const FaceSubset& other) const { return bits_ == other.bits_; }

  // Face ids of the support, in index (= lexicographic) order.
  std::vector<Id> ids(const TwoComplex& complex) const;

 private:
  boost::dynamic_bitset<> bits_;
};

// Edge and vertex incidence counts keyed by id.
struct DegreeReport {
  std::map<Id, std::size_t> edge_degrees;
  std::map<Id, std::size_t> vertex_degrees;
};

// Reads the line-oriented complex format; see serialize_complex for the
// grammar.  Throws ParseError with the offending location.
TwoComplex parse_complex(const std::string& text);

// Emits `vertex <id>` / `edge <id> <tail> <head>` / `face <id> = <+-edge>...`
// lines in sorted id order; output is a pure function of the complex.
std::string serialize_complex(const TwoComplex& complex);

DegreeReport degrees(const TwoComplex& complex);

// First edge (in id order) whose degree is zero or odd, if any.
std::optional<Id> first_uneven_edge(const TwoComplex& complex);

// Every edge has positive even degree.
bool is_even(const TwoComplex& complex);

// The incidence graph on vertices + edges + faces is connected.
// Throws std::invalid_argument on a complex with no cells.
bool is_connected(const TwoComplex& complex);

// Connected, every edge lies in a face, and the edge-face incidence graph
// is connected (so removing the vertices cannot disconnect the complex).
// Throws std::invalid_argument on a complex with no faces.
bool is_strongly_connected(const TwoComplex& complex);

// The complex induced by a nonempty face subset: keeps exactly the cells
// incident to the chosen faces, ids preserved.
TwoComplex subcomplex(const TwoComplex& complex, const FaceSubset& faces);
TwoComplex subcomplex(const TwoComplex& complex, std::span<const Id> face_ids);

}  // namespace circlet
