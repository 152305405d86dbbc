#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/monomial.hpp"
#include "core/rational.hpp"

namespace lef {

// Sparse multivariate polynomial over the rationals in a fixed ambient set of
// variables x_1..x_n. Also used for operator polynomials in the partial
// derivatives, which act on ordinary polynomials via apply_operator.
//
// Invariants: no stored coefficient is zero; every variable index appearing
// lies in [1, n_vars]. Values are immutable in practice: all operations
// return new polynomials.
class Polynomial {
 public:
  explicit Polynomial(int n_vars);

  static Polynomial zero(int n_vars) { return Polynomial(n_vars); }
  static Polynomial constant(int n_vars, const Rat& c);
  static Polynomial monomial(int n_vars, const Monomial& m, const Rat& c = 1);

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  Rat coefficient(const Monomial& m) const;
  Rat constant_term() const { return coefficient(Monomial::one()); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_squarefree_support() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Rat& c) const;
  bool operator==(const Polynomial&) const = default;

  Rat evaluate(std::span<const Rat> point) const;

  // Same polynomial in a larger ambient variable set. n must be at least the
  // largest variable index in use.
  Polynomial with_n_vars(int n) const;

  std::string str(const std::string& symbol = "x") const;

 private:
  friend Polynomial apply_operator(const Polynomial&, const Polynomial&);
  friend Polynomial apply_monomial_operator(const Monomial&, const Polynomial&);

  void add_term(const Monomial& m, const Rat& c);

  int n_vars_;
  std::map<Monomial, Rat> terms_;
};

// Interprets D as a polynomial in the operators d/dx_i and applies it to F
// term by term. D and F must share n_vars.
Polynomial apply_operator(const Polynomial& D, const Polynomial& F);
Polynomial apply_monomial_operator(const Monomial& op, const Polynomial& F);

// The linear differential operator a_1 d_1 + ... + a_n d_n.
Polynomial linear_form(std::span<const Rat> coeffs);

// Applies the operator L to F `times` times in succession (avoids expanding
// L^times as a polynomial).
Polynomial apply_power(const Polynomial& L, int times, const Polynomial& F);

}  // namespace lef
