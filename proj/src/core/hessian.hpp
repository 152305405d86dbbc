#pragma once

#include <span>
#include <vector>

#include "core/algebra.hpp"
#include "core/linalg.hpp"
#include "core/polynomial.hpp"

namespace lef {

// k-th Hessian with polynomial entries (e_i e_j F) over the basis Lambda_k,
// entries of degree s - 2k.
struct SymbolicHessian {
  int degree = 0;
  std::vector<Monomial> basis;
  std::vector<Polynomial> entries;  // row-major, dim x dim

  int dim() const { return static_cast<int>(basis.size()); }
  const Polynomial& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * basis.size() + j];
  }
};

// Symbolic entries are only materialized for entry degree s - 2k <= 3; larger
// inputs must go through hessian_at, which fuses evaluation into construction.
SymbolicHessian hessian_symbolic(GorensteinAlgebra& algebra, int k);

// H^k_F(a), symmetric rational matrix over Lambda_k. k = 0 gives the 1x1
// matrix [F(a)].
ExactMatrix hessian_at(GorensteinAlgebra& algebra, int k, std::span<const Rat> point);

// The h_{k-1} x h_k matrix K[i][j] = (e_i e_j F)(a) with rows over
// Lambda_{k-1} and columns over Lambda_k. By nondegeneracy of the Poincare
// pairing its null space, in coordinates over Lambda_k, is the primitive
// subspace Ker(x l_a^{s-2k+1}) in A_k.
ExactMatrix mixed_hessian_at(GorensteinAlgebra& algebra, int k, std::span<const Rat> point);

}  // namespace lef
