#include "circlet/gf2.hpp"

#include <algorithm>
#include <cassert>

namespace circlet {

Gf2Matrix boundary_matrix(const TwoComplex& complex) {
  Gf2Matrix m;
  m.rows = complex.edge_count();
  m.cols = complex.face_count();
  m.row.assign(m.rows, FaceSubset(m.cols));
  for (std::size_t e = 0; e < m.rows; ++e)
    for (std::size_t f : complex.faces_of_edge(e)) m.row[e].set(f);
  return m;
}

std::vector<FaceSubset> reduced_basis(std::vector<FaceSubset> vectors) {
  std::vector<FaceSubset> basis;  // kept sorted by pivot, ascending
  for (FaceSubset& v : vectors) {
    for (const FaceSubset& b : basis)
      if (v.test(b.find_first())) v ^= b;
    if (!v.any()) continue;
    std::size_t pivot = v.find_first();
    for (FaceSubset& b : basis)
      if (b.test(pivot)) b ^= v;
    basis.insert(std::upper_bound(basis.begin(), basis.end(), v,
                                  [](const FaceSubset& a, const FaceSubset& b) {
                                    return a.find_first() < b.find_first();
                                  }),
                 std::move(v));
  }
  return basis;
}

namespace {

// Free-variable nullspace over the given columns.  Gaussian elimination
// with pivots chosen in increasing column order.
std::vector<FaceSubset> nullspace(const Gf2Matrix& matrix,
                                  const FaceSubset& cols) {
  std::vector<FaceSubset> rows = matrix.row;
  std::vector<std::size_t> pivot_row;  // aligned with pivot_col
  std::vector<std::size_t> pivot_col;
  std::vector<bool> used(rows.size(), false);

  for (std::size_t c = cols.find_first(); c != FaceSubset::npos;
       c = cols.find_next(c)) {
    std::size_t chosen = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && rows[r].test(c)) {
        chosen = r;
        break;
      }
    }
    if (chosen == rows.size()) continue;
    used[chosen] = true;
    pivot_row.push_back(chosen);
    pivot_col.push_back(c);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != chosen && rows[r].test(c)) rows[r] ^= rows[chosen];
  }

  std::vector<FaceSubset> kernel;
  for (std::size_t c = cols.find_first(); c != FaceSubset::npos;
       c = cols.find_next(c)) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end())
      continue;
    FaceSubset v(matrix.cols);
    v.set(c);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (rows[pivot_row[i]].test(c)) v.set(pivot_col[i]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

std::vector<FaceSubset> kernel_basis(const Gf2Matrix& matrix) {
  return reduced_basis(nullspace(matrix, FaceSubset::all(matrix.cols)));
}

std::vector<FaceSubset> kernel_basis_within(const Gf2Matrix& matrix,
                                            const FaceSubset& cols) {
  Gf2Matrix masked;
  masked.rows = matrix.rows;
  masked.cols = matrix.cols;
  masked.row.reserve(matrix.rows);
  for (const FaceSubset& r : matrix.row) masked.row.push_back(r & cols);
  return reduced_basis(nullspace(masked, cols));
}

bool is_circlet(const TwoComplex& complex) {
  if (!is_even(complex)) return false;
  return kernel_basis(boundary_matrix(complex)).size() == 1;
}

namespace {

void decompose_part(const Gf2Matrix& matrix, const FaceSubset& part,
                    std::vector<FaceSubset>& out) {
  std::vector<FaceSubset> basis = kernel_basis_within(matrix, part);
  // An even nonempty part always lies in its own restricted kernel.
  assert(!basis.empty());
  if (basis.size() == 1) {
    out.push_back(part);
    return;
  }
  for (const FaceSubset& v : basis) {
    if (v.any() && v.is_proper_subset_of(part)) {
      decompose_part(matrix, v, out);
      decompose_part(matrix, v ^ part, out);
      return;
    }
  }
  assert(false && "kernel of dimension > 1 has a proper nonempty element");
}

}  // namespace

std::vector<FaceSubset> circlet_decomposition(const TwoComplex& complex) {
  if (auto e = first_uneven_edge(complex))
    throw std::invalid_argument(
        "circlet_decomposition: complex is not even (edge '" + *e + "')");
  std::vector<FaceSubset> parts;
  if (complex.face_count() == 0) return parts;
  decompose_part(boundary_matrix(complex), FaceSubset::all(complex.face_count()),
                 parts);
  return parts;
}

}  // namespace circlet
