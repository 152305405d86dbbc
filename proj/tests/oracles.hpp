#pragma once

// Independent verification routes used by the test and acceptance suites.
// These deliberately avoid the Hessian/determinant code paths they are used
// to check: everything here is assembled from polynomial images only.

#include <span>
#include <vector>

#include "core/algebra.hpp"
#include "core/linalg.hpp"
#include "core/polynomial.hpp"

namespace lef::oracles {

// Rank of the multiplication map x l_a^{s-2k}: A_k -> A_{s-k}, computed from
// the coefficient vectors of the polynomials l_a^{s-2k} (e_j F), e_j in
// Lambda_k. The map is bijective iff this equals h_k.
int multiplication_map_rank(GorensteinAlgebra& algebra, int k, std::span<const Rat> a);

// The degree-one Hodge-Riemann form assembled from first principles: apply
// l_a^{s-2} to F, then e_i e_j, take the constant term and negate.
ExactMatrix q1_matrix(GorensteinAlgebra& algebra, std::span<const Rat> a);

// -(l_a^s F) = Q^1(l_a, l_a); expected to equal -s! F(a).
Rat q1_ell_ell(const Polynomial& F, std::span<const Rat> a);

// Poincare pairing matrix: entries (e_i e_j F) constant term with e_i in
// Lambda_k and e_j in Lambda_{s-k}; full rank h_k iff the pairing is
// nondegenerate in degree k.
ExactMatrix poincare_pairing(GorensteinAlgebra& algebra, int k);

// Coordinates of the images of `basis` in the images of `reference`: the
// change-of-basis matrix S with image(reference) * S = image(basis).
ExactMatrix change_of_basis(GorensteinAlgebra& algebra,
                            const std::vector<Monomial>& reference,
                            const std::vector<Monomial>& basis);

// Coefficient-vector matrix of a list of polynomials over their joint
// monomial support (columns = polynomials).
ExactMatrix image_matrix(const std::vector<Polynomial>& polys);

}  // namespace lef::oracles
