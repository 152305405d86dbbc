#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace lef {

// Dense univariate polynomial over the rationals, coefficients ascending.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  static UniPoly constant(const Rat& c);
  // Builds from integer coefficients in descending order, e.g. {1, 0, -20}
  // gives x^2 - 20.
  static UniPoly from_descending_ints(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat leading() const;

  UniPoly operator+(const UniPoly&) const;
  UniPoly operator-(const UniPoly&) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly&) const;
  UniPoly scaled(const Rat& c) const;
  bool operator==(const UniPoly&) const = default;

  UniPoly derivative() const;
  Rat evaluate(const Rat& x) const;
  UniPoly monic() const;
  UniPoly pow(int e) const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

// Polynomial division; second component is the remainder.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Yun's squarefree decomposition of a monic polynomial: returns pairs
// (squarefree factor, multiplicity) whose product of powers is the input.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Counts real roots, with multiplicity, in (0, inf) / (-inf, 0) / at 0.
struct RealRootCounts {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
RealRootCounts count_real_roots_signed(const UniPoly& p);

}  // namespace lef
