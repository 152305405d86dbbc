#pragma once

#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/univariate.hpp"

namespace lef {

// Dense matrix over exact rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  Rat trace() const;
  ExactMatrix transposed() const;
  ExactMatrix operator*(const ExactMatrix&) const;
  ExactMatrix operator+(const ExactMatrix&) const;
  ExactMatrix scaled(const Rat& c) const;
  bool operator==(const ExactMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

// Exact determinant via fraction-free Bareiss elimination (rows are cleared
// of denominators first). Throws std::domain_error for non-square input.
Rat determinant(const ExactMatrix& m);

int rank(const ExactMatrix& m);

// Basis of the right null space, each vector of length cols().
std::vector<std::vector<Rat>> kernel(const ExactMatrix& m);

// Solves B * X = T for X where the columns of T lie in the column span of B.
// B must have full column rank. Throws std::domain_error if inconsistent.
ExactMatrix solve_in_column_span(const ExactMatrix& b, const ExactMatrix& t);

// Characteristic polynomial det(λI - M), monic, via exact Hessenberg
// reduction; for dimension <= 20 the Faddeev-LeVerrier coefficients are
// computed as an independent cross-check and must agree.
UniPoly charpoly(const ExactMatrix& m);
UniPoly charpoly_hessenberg(const ExactMatrix& m);
UniPoly charpoly_faddeev_leverrier(const ExactMatrix& m);

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact inertia of a symmetric matrix by congruence reduction (symmetric
// pivoting; rank-two update when the active diagonal is all zero).
Inertia signature_congruence(const ExactMatrix& m);
// Exact inertia via root counting of the characteristic polynomial
// (squarefree decomposition + Sturm chains).
Inertia signature_sturm(const ExactMatrix& m);
// Congruence inertia, cross-checked against the Sturm route for
// dimension <= 64 (both must agree).
Inertia signature(const ExactMatrix& m);

// A claimed spectrum: integer-coefficient irreducible factors of the
// characteristic polynomial with multiplicities.
struct SpectrumClaim {
  std::vector<std::pair<UniPoly, int>> factors;
  int total_degree() const;
  UniPoly expand() const;
};

// True iff the product of the claimed factors equals charpoly(m) exactly.
// Throws std::invalid_argument when the claimed dimension does not match.
bool verify_spectrum(const ExactMatrix& m, const SpectrumClaim& claim);

// Incremental row echelon used for rank scans and greedy basis selection.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(int n_cols);
  // Reduces the row against the pivots collected so far; keeps it (and
  // returns true) iff it is independent of them.
  bool add_row(std::vector<Rat> row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return n_cols_; }

 private:
  int n_cols_;
  std::vector<int> pivot_cols_;
  std::vector<std::vector<Rat>> rows_;
};

}  // namespace lef
