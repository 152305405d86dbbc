#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lef {

// A monomial in variables x_1, x_2, ... (1-based indices), stored as a sparse
// sorted list of (variable, exponent) pairs with all exponents positive.
// The same type represents operator monomials in the partial derivatives.
class Monomial {
 public:
  using Factor = std::pair<int, int>;  // (variable index, exponent > 0)

  Monomial() = default;

  static Monomial one() { return Monomial(); }
  static Monomial variable(int var, int exp = 1);
  // Builds from possibly unsorted/repeated variable indices, e.g. {1,3,1}
  // gives x_1^2 x_3.
  static Monomial from_vars(const std::vector<int>& vars);

  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  bool is_squarefree() const;
  int exponent(int var) const;
  int max_var() const { return factors_.empty() ? 0 : factors_.back().first; }
  const std::vector<Factor>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient_into(const Monomial& other) const;

  // Sorted list of variable indices with repetition, e.g. x_1^2 x_3 -> {1,1,3}.
  std::vector<int> to_vars() const;

  bool operator==(const Monomial&) const = default;

  // Canonical order: ascending total degree, then within a degree the monomial
  // with the larger exponent on the earliest differing variable comes first
  // (x_1^2 < x_1 x_2 < x_1 x_3 < ... < x_2^2 < ...).
  bool operator<(const Monomial& other) const;

  std::string str(const std::string& symbol = "x") const;

 private:
  std::vector<Factor> factors_;  // sorted by variable index
  int degree_ = 0;
};

// All degree-k monomials in n variables, in canonical order.
std::vector<Monomial> monomials_of_degree(int n_vars, int degree);
// The squarefree ones only.
std::vector<Monomial> squarefree_monomials_of_degree(int n_vars, int degree);

}  // namespace lef
