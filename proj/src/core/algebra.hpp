#pragma once

#include <map>
#include <optional>
#include <vector>

#include "core/linalg.hpp"
#include "core/polynomial.hpp"

namespace lef {

// Degree-k catalecticant of F: rows are candidate degree-k operator
// monomials, columns the degree-(s-k) monomials dividing some term of F,
// entries the coefficients of the image d^alpha F.
struct Catalecticant {
  int degree = 0;
  std::vector<Monomial> row_ops;
  std::vector<Monomial> col_monomials;
  ExactMatrix matrix;
};

// The graded Artinian Gorenstein algebra R[d_1..d_n]/Ann(F) presented by a
// homogeneous dual generator F, modelled degree by degree through apolarity:
// A_k is identified with the span of the images d^alpha F.
//
// h_k is the rank of the degree-k catalecticant. Monomial bases Lambda_k are
// selected greedily in the canonical monomial order unless an explicit basis
// is installed (set_basis), which is verified before use.
class GorensteinAlgebra {
 public:
  explicit GorensteinAlgebra(Polynomial F);

  const Polynomial& dual_generator() const { return F_; }
  int n_vars() const { return F_.n_vars(); }
  int socle_degree() const { return socle_; }
  bool squarefree() const { return squarefree_; }

  // (h_0, ..., h_s); palindromic.
  const std::vector<int>& hilbert();
  int hilbert_component(int k);

  // Independent recomputation of h_k with an explicit candidate policy,
  // used to cross-check that restricting candidates to squarefree monomials
  // does not change the rank.
  int hilbert_component_via(int k, bool squarefree_candidates) const;

  const std::vector<Monomial>& basis(int k);
  // Installs an explicit basis for degree k after verifying that its images
  // are independent and that it has exactly h_k elements.
  void set_basis(int k, const std::vector<Monomial>& hint);

  std::vector<Monomial> candidate_monomials(int k) const;
  Catalecticant catalecticant(int k) const;
  Catalecticant catalecticant(int k, bool squarefree_candidates) const;

  bool annihilates(const Polynomial& op) const;

  struct AnnihilatorKernel {
    std::vector<Monomial> candidates;
    std::vector<std::vector<Rat>> vectors;  // null-space basis over candidates
    std::vector<Polynomial> operators;      // the same vectors as operator polynomials
  };
  AnnihilatorKernel annihilator_kernel(int k) const;

 private:
  void scan_degree(int k);

  Polynomial F_;
  int socle_ = 0;
  bool squarefree_ = false;
  std::vector<std::optional<int>> h_;
  std::vector<std::optional<std::vector<Monomial>>> greedy_bases_;
  std::map<int, std::vector<Monomial>> installed_bases_;
  std::optional<std::vector<int>> full_hilbert_;
};

// Checks the reduction of the octahedron algebra to the monomial complete
// intersection on three square generators: all six reduction generators
// (d1-d6, d2-d4, d3-d5, d1^2, d2^2, d3^2) must annihilate F and the Hilbert
// function must equal (1,3,3,1). F is embedded into six variables if needed.
bool verify_octahedron_reduction(const Polynomial& F);

}  // namespace lef
