#pragma once

#include <map>
#include <string>
#include <vector>

#include "circlet/complex.hpp"

namespace circlet {

// 2-skeleton of the n-simplex: vertices 1..n+1, an edge per pair, a
// triangular face per triple.  Every edge has degree n-1, so the skeleton
// is even exactly for odd n.  Requires n >= 2.
TwoComplex simplex_skeleton(int n);

// Partition of simplex_skeleton(n)'s faces into spherical circlets, for
// odd n >= 3.  With antipodal vertex pairs {2i-1, 2i}: an octahedral part
// O(i,j,k) of 8 faces per index triple, then a tetrahedral part T(i,j) of
// 4 faces per index pair.
std::vector<FaceSubset> simplex_sphere_decomposition(int n);

// 2-skeleton of the n-cube: bit-string vertices, Hamming-distance-1 edges,
// square faces with two free coordinates.  Edge degree n-1.  n >= 2.
TwoComplex hypercube_skeleton(int n);

// 2-skeleton of the n-dimensional cross-polytope: vertices +-1..+-n, edges
// between non-antipodal pairs, triangles on pairwise non-antipodal
// triples.  Edge degree 2(n-2).  n >= 3.
TwoComplex cross_polytope_skeleton(int n);

// Octahedron with its two poles identified into one vertex: (5, 12, 8),
// every edge degree 2.  A circlet but not a surface; the pinch vertex has
// a two-circle link.
TwoComplex pinched_sphere();

// Two tetrahedron boundaries sharing exactly one edge: (6, 11, 8); the
// shared edge has degree 4.  Even and strongly connected but not a
// circlet.
TwoComplex two_tetra_shared_edge();

// A square-grid tube of circumference 4 and length 10 with one shaft
// square detached as an isolated face, and the four boundary 4-cycles
// (both rims, the hole, the isolated square) identified into a single
// 4-cycle a,b,c,d on vertices 1,2,3,4.  Counts (36, 76, 40); the four
// identified edges have degree 4, all 72 others degree 2; a circlet with
// 81 gluing assignments.
TwoComplex figure2_complex();

// tetrahedron (4,6,4), cube (8,12,6), octahedron (6,12,8), keyed by name;
// each an even spherical circlet.
std::map<std::string, TwoComplex> platonic_circlets();

}  // namespace circlet
