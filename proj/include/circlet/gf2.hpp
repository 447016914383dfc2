#pragma once

#include <cstddef>
#include <vector>

#include "circlet/complex.hpp"

namespace circlet {

// Edge-face incidence matrix over GF(2).  Row e, column f is 1 iff edge e
// lies on face f; both axes in lexicographic id order.
struct Gf2Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FaceSubset> row;  // each of width cols
};

Gf2Matrix boundary_matrix(const TwoComplex& complex);

// Canonical (reduced row-echelon) basis of a list of GF(2) vectors:
// one vector per pivot, pivots strictly increasing, each pivot column zero
// in every other basis vector.  Unique for the spanned subspace.
std::vector<FaceSubset> reduced_basis(std::vector<FaceSubset> vectors);

// Basis of { S : every edge has even incidence count within S }, i.e. the
// face sets of even sub-2-complexes, in reduced row-echelon form.
std::vector<FaceSubset> kernel_basis(const Gf2Matrix& matrix);

// Kernel of the matrix restricted to the columns in `cols`; returned
// vectors have full width with support inside `cols`.
std::vector<FaceSubset> kernel_basis_within(const Gf2Matrix& matrix,
                                            const FaceSubset& cols);

// Even, and the only even sub-face-sets are empty and full (kernel
// dimension 1); equivalently, not a face-disjoint union of two even
// 2-complexes.
bool is_circlet(const TwoComplex& complex);

// Partition of the face set into parts each inducing a circlet.
// Deterministic: a part whose restricted kernel has dimension > 1 is split
// along the echelon basis vector with the smallest pivot, support first.
// Throws std::invalid_argument if the complex is not even.
std::vector<FaceSubset> circlet_decomposition(const TwoComplex& complex);

}  // namespace circlet
