#include "core/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lef {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimensions");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

Rat ExactMatrix::trace() const {
  if (!is_square()) throw std::domain_error("trace of non-square matrix");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) != 0) out.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  ExactMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + o.at(i, j);
  }
  return out;
}

ExactMatrix ExactMatrix::scaled(const Rat& c) const {
  ExactMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) * c;
  }
  return out;
}

Rat determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw std::domain_error("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Rat(1);

  // Clear denominators row by row; track the combined scale.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rat scale = 1;
  for (int i = 0; i < n; ++i) {
    Int lcm = 1;
    for (int j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    }
    scale /= Rat(lcm);
    for (int j = 0; j < n; ++j) {
      Rat v = m.at(i, j) * Rat(lcm);
      a[i][j] = v.get_num();
    }
  }

  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Rat(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rat(a[n - 1][n - 1]) * scale * sign;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Rat>>& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i) {
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    const Rat lead = m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rat>> to_rows(const ExactMatrix& m) {
  std::vector<std::vector<Rat>> rows(m.rows(), std::vector<Rat>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  }
  return rows;
}

}  // namespace

int rank(const ExactMatrix& m) {
  IncrementalEchelon ech(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<Rat> row(m.cols());
    for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    ech.add_row(std::move(row));
    if (ech.rank() == m.cols()) break;
  }
  return ech.rank();
}

std::vector<std::vector<Rat>> kernel(const ExactMatrix& m) {
  auto rows = to_rows(m);
  const int cols = m.cols();
  std::vector<int> pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -rows[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix solve_in_column_span(const ExactMatrix& b, const ExactMatrix& t) {
  if (b.rows() != t.rows()) throw std::invalid_argument("solve: row mismatch");
  const int cols = b.cols() + t.cols();
  std::vector<std::vector<Rat>> aug(b.rows(), std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) aug[i][j] = b.at(i, j);
    for (int j = 0; j < t.cols(); ++j) aug[i][b.cols() + j] = t.at(i, j);
  }
  std::vector<int> pivots = rref(aug, cols);
  ExactMatrix x(b.cols(), t.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= b.cols()) {
      throw std::domain_error("solve: target not in column span");
    }
  }
  if (static_cast<int>(pivots.size()) != b.cols()) {
    throw std::domain_error("solve: matrix does not have full column rank");
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (int j = 0; j < t.cols(); ++j) x.at(pivots[r], j) = aug[r][b.cols() + j];
  }
  return x;
}

UniPoly charpoly_hessenberg(const ExactMatrix& m) {
  if (!m.is_square()) throw std::domain_error("charpoly of non-square matrix");
  const int n = m.rows();
  if (n == 0) return UniPoly::constant(1);
  auto h = to_rows(m);

  // Similarity reduction to upper Hessenberg form over the rationals.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i) {
      if (h[i][j] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    for (int i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const Rat f = h[i][j] / h[j + 1][j];
      for (int c = 0; c < n; ++c) h[i][c] -= f * h[j + 1][c];
      for (int r = 0; r < n; ++r) h[r][j + 1] += f * h[r][i];
    }
  }

  // Leading principal characteristic polynomials of a Hessenberg matrix.
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly::constant(1);
  const UniPoly lambda({Rat(0), Rat(1)});
  for (int k = 1; k <= n; ++k) {
    p[k] = (lambda - UniPoly::constant(h[k - 1][k - 1])) * p[k - 1];
    Rat prod = 1;
    for (int m2 = 1; m2 <= k - 1; ++m2) {
      prod *= h[k - m2][k - m2 - 1];
      if (prod == 0) break;
      p[k] = p[k] - p[k - 1 - m2].scaled(h[k - 1 - m2][k - 1] * prod);
    }
  }
  return p[n];
}

UniPoly charpoly_faddeev_leverrier(const ExactMatrix& m) {
  if (!m.is_square()) throw std::domain_error("charpoly of non-square matrix");
  const int n = m.rows();
  if (n == 0) return UniPoly::constant(1);
  std::vector<Rat> coeff_desc(static_cast<std::size_t>(n) + 1);
  coeff_desc[0] = 1;
  ExactMatrix mk = ExactMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    ExactMatrix am = m * mk;
    Rat ck = -am.trace() / Rat(k);
    coeff_desc[static_cast<std::size_t>(k)] = ck;
    mk = am;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  std::vector<Rat> asc(coeff_desc.rbegin(), coeff_desc.rend());
  return UniPoly(std::move(asc));
}

UniPoly charpoly(const ExactMatrix& m) {
  UniPoly p = charpoly_hessenberg(m);
  if (m.rows() <= 20) {
    if (p != charpoly_faddeev_leverrier(m)) {
      throw std::logic_error("characteristic polynomial cross-check failed");
    }
  }
  return p;
}

Inertia signature_congruence(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw std::domain_error("signature of non-symmetric matrix");
  const int n = m.rows();
  auto a = to_rows(m);
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  Inertia sig;
  while (!active.empty()) {
    int piv = -1;
    for (int i : active) {
      if (a[i][i] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      // All active diagonal entries vanish. Pick a nonzero off-diagonal pair
      // and merge: row/col i += row/col j creates the diagonal entry 2a_ij.
      int oi = -1, oj = -1;
      for (std::size_t p = 0; p < active.size() && oi < 0; ++p) {
        for (std::size_t q = p + 1; q < active.size(); ++q) {
          if (a[active[p]][active[q]] != 0) {
            oi = active[p];
            oj = active[q];
            break;
          }
        }
      }
      if (oi < 0) {
        sig.n_zero += static_cast<int>(active.size());
        break;
      }
      for (int t : active) a[oi][t] += a[oj][t];
      for (int t : active) a[t][oi] += a[t][oj];
      continue;
    }
    const Rat d = a[piv][piv];
    if (d > 0) {
      ++sig.n_plus;
    } else {
      ++sig.n_minus;
    }
    active.erase(std::find(active.begin(), active.end(), piv));
    // Schur complement on the remaining active block.
    std::vector<Rat> pivot_row(n);
    for (int j : active) pivot_row[j] = a[piv][j];
    for (int i : active) {
      if (pivot_row[i] == 0) continue;
      const Rat f = pivot_row[i] / d;
      for (int j : active) a[i][j] -= f * pivot_row[j];
    }
    for (int i : active) {
      a[i][piv] = 0;
      a[piv][i] = 0;
    }
  }
  return sig;
}

Inertia signature_sturm(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw std::domain_error("signature of non-symmetric matrix");
  const UniPoly p = charpoly(m);
  const RealRootCounts counts = count_real_roots_signed(p);
  return Inertia{counts.positive, counts.negative, counts.zero};
}

Inertia signature(const ExactMatrix& m) {
  Inertia sig = signature_congruence(m);
  if (m.rows() <= 64) {
    if (signature_sturm(m) != sig) {
      throw std::logic_error("signature cross-check failed");
    }
  }
  return sig;
}

int SpectrumClaim::total_degree() const {
  int d = 0;
  for (const auto& [f, mult] : factors) d += f.degree() * mult;
  return d;
}

UniPoly SpectrumClaim::expand() const {
  UniPoly out = UniPoly::constant(1);
  for (const auto& [f, mult] : factors) out = out * f.pow(mult);
  return out;
}

bool verify_spectrum(const ExactMatrix& m, const SpectrumClaim& claim) {
  if (!m.is_square()) throw std::domain_error("verify_spectrum: non-square matrix");
  if (claim.total_degree() != m.rows()) {
    throw std::invalid_argument("spectrum claim dimension mismatch");
  }
  return claim.expand().monic() == charpoly(m);
}

IncrementalEchelon::IncrementalEchelon(int n_cols) : n_cols_(n_cols) {}

bool IncrementalEchelon::add_row(std::vector<Rat> row) {
  if (static_cast<int>(row.size()) != n_cols_) {
    throw std::invalid_argument("echelon row width mismatch");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int pc = pivot_cols_[r];
    if (row[pc] == 0) continue;
    const Rat f = row[pc];
    for (int j = 0; j < n_cols_; ++j) {
      if (rows_[r][j] != 0) row[j] -= f * rows_[r][j];
    }
  }
  int pivot = -1;
  for (int j = 0; j < n_cols_; ++j) {
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rat lead = row[pivot];
  for (int j = 0; j < n_cols_; ++j) row[j] /= lead;
  pivot_cols_.push_back(pivot);
  rows_.push_back(std::move(row));
  return true;
}

}  // namespace lef
