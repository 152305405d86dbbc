#pragma once

#include <vector>

#include "core/face_poset.hpp"
#include "core/monomial.hpp"
#include "core/polynomial.hpp"
#include "core/rational.hpp"

namespace lef::fixtures {

// The hand-picked 18-element degree-2 basis for the hexahedron algebra,
// ordered so the second Hessian is block diagonal with nine [[0,1],[1,0]]
// blocks (consecutive elements multiply to a full face monomial).
std::vector<Monomial> hexahedron_lambda2();

// All pairs of vertices lying in a common face, in canonical order; for the
// dodecahedron these 90 pairs form the greedy degree-2 basis.
std::vector<Monomial> coplanar_pairs(const FacePoset& poset);

// The three evaluation vectors used for the dodecahedron: a = all ones,
// b = ones with zeros on vertices 6..10, c = ones with a zero on vertex 1.
std::vector<Rat> dodecahedron_point_a();
std::vector<Rat> dodecahedron_point_b();
std::vector<Rat> dodecahedron_point_c();

// Dual generator x1 x2 x3 of the reduced octahedron model
// R[d1,d2,d3]/(d1^2, d2^2, d3^2).
Polynomial octahedron_reduced_generator();

std::vector<Rat> all_ones(int n);

}  // namespace lef::fixtures
