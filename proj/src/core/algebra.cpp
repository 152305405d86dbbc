#include "core/algebra.hpp"

#include <set>
#include <stdexcept>

namespace lef {

namespace {

void collect_divisors(const std::vector<Monomial::Factor>& factors, std::size_t idx,
                      int remaining, std::vector<int>& stack,
                      std::set<Monomial>& out) {
  if (remaining == 0) {
    out.insert(Monomial::from_vars(stack));
    return;
  }
  if (idx == factors.size()) return;
  const auto& [v, e] = factors[idx];
  const int take_max = std::min(e, remaining);
  for (int take = 0; take <= take_max; ++take) {
    for (int i = 0; i < take; ++i) stack.push_back(v);
    collect_divisors(factors, idx + 1, remaining - take, stack, out);
    for (int i = 0; i < take; ++i) stack.pop_back();
  }
}

// All degree-d monomials dividing some term of F; these are the only
// monomials that can appear in any image d^alpha F with |alpha| = deg F - d.
std::vector<Monomial> divisor_support(const Polynomial& F, int d) {
  std::set<Monomial> support;
  std::vector<int> stack;
  for (const auto& [m, c] : F.terms()) {
    if (m.degree() < d) continue;
    collect_divisors(m.factors(), 0, d, stack, support);
  }
  return {support.begin(), support.end()};
}

std::vector<Rat> image_row(const Polynomial& image,
                           const std::map<Monomial, int>& col_of, int n_cols) {
  std::vector<Rat> row(static_cast<std::size_t>(n_cols), Rat(0));
  for (const auto& [m, c] : image.terms()) {
    row[static_cast<std::size_t>(col_of.at(m))] = c;
  }
  return row;
}

}  // namespace

GorensteinAlgebra::GorensteinAlgebra(Polynomial F) : F_(std::move(F)) {
  if (F_.is_zero()) throw std::domain_error("dual generator must be nonzero");
  if (!F_.is_homogeneous()) {
    throw std::domain_error("dual generator must be homogeneous");
  }
  socle_ = F_.degree();
  squarefree_ = F_.is_squarefree_support();
  h_.assign(static_cast<std::size_t>(socle_) + 1, std::nullopt);
  greedy_bases_.assign(static_cast<std::size_t>(socle_) + 1, std::nullopt);
}

std::vector<Monomial> GorensteinAlgebra::candidate_monomials(int k) const {
  if (k < 0 || k > socle_) throw std::invalid_argument("degree out of range");
  return squarefree_ ? squarefree_monomials_of_degree(n_vars(), k)
                     : monomials_of_degree(n_vars(), k);
}

void GorensteinAlgebra::scan_degree(int k) {
  if (h_[static_cast<std::size_t>(k)]) return;
  const std::vector<Monomial> cols = divisor_support(F_, socle_ - k);
  std::map<Monomial, int> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

  IncrementalEchelon echelon(static_cast<int>(cols.size()));
  std::vector<Monomial> greedy;
  for (const Monomial& cand : candidate_monomials(k)) {
    const Polynomial image = apply_monomial_operator(cand, F_);
    if (image.is_zero()) continue;
    if (echelon.add_row(image_row(image, col_of, echelon.n_cols()))) {
      greedy.push_back(cand);
      if (echelon.rank() == echelon.n_cols()) break;
    }
  }
  h_[static_cast<std::size_t>(k)] = echelon.rank();
  greedy_bases_[static_cast<std::size_t>(k)] = std::move(greedy);
}

const std::vector<int>& GorensteinAlgebra::hilbert() {
  if (!full_hilbert_) {
    std::vector<int> h;
    h.reserve(static_cast<std::size_t>(socle_) + 1);
    for (int k = 0; k <= socle_; ++k) h.push_back(hilbert_component(k));
    full_hilbert_ = std::move(h);
  }
  return *full_hilbert_;
}

int GorensteinAlgebra::hilbert_component(int k) {
  if (k < 0 || k > socle_) return 0;
  scan_degree(k);
  return *h_[static_cast<std::size_t>(k)];
}

int GorensteinAlgebra::hilbert_component_via(int k, bool squarefree_candidates) const {
  return rank(catalecticant(k, squarefree_candidates).matrix);
}

const std::vector<Monomial>& GorensteinAlgebra::basis(int k) {
  if (k < 0 || k > socle_) throw std::invalid_argument("degree out of range");
  if (auto it = installed_bases_.find(k); it != installed_bases_.end()) {
    return it->second;
  }
  scan_degree(k);
  return *greedy_bases_[static_cast<std::size_t>(k)];
}

void GorensteinAlgebra::set_basis(int k, const std::vector<Monomial>& hint) {
  if (k < 0 || k > socle_) throw std::invalid_argument("degree out of range");
  const int hk = hilbert_component(k);
  if (static_cast<int>(hint.size()) != hk) {
    throw std::invalid_argument("basis hint has " + std::to_string(hint.size()) +
                                " elements, expected h_k = " + std::to_string(hk));
  }
  const std::vector<Monomial> cols = divisor_support(F_, socle_ - k);
  std::map<Monomial, int> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);
  IncrementalEchelon echelon(static_cast<int>(cols.size()));
  for (const Monomial& m : hint) {
    if (m.degree() != k) {
      throw std::invalid_argument("basis hint contains a monomial of wrong degree");
    }
    if (m.max_var() > n_vars()) {
      throw std::invalid_argument("basis hint monomial uses an out-of-range variable");
    }
    const Polynomial image = apply_monomial_operator(m, F_);
    if (image.is_zero() || !echelon.add_row(image_row(image, col_of, echelon.n_cols()))) {
      throw std::invalid_argument("basis hint images are not linearly independent");
    }
  }
  installed_bases_[k] = hint;
}

Catalecticant GorensteinAlgebra::catalecticant(int k) const {
  return catalecticant(k, squarefree_);
}

Catalecticant GorensteinAlgebra::catalecticant(int k, bool squarefree_candidates) const {
  if (k < 0 || k > socle_) throw std::invalid_argument("degree out of range");
  Catalecticant cat;
  cat.degree = k;
  cat.row_ops = squarefree_candidates ? squarefree_monomials_of_degree(n_vars(), k)
                                      : monomials_of_degree(n_vars(), k);
  cat.col_monomials = divisor_support(F_, socle_ - k);
  std::map<Monomial, int> col_of;
  for (std::size_t i = 0; i < cat.col_monomials.size(); ++i) {
    col_of[cat.col_monomials[i]] = static_cast<int>(i);
  }
  cat.matrix = ExactMatrix(static_cast<int>(cat.row_ops.size()),
                           static_cast<int>(cat.col_monomials.size()));
  for (std::size_t r = 0; r < cat.row_ops.size(); ++r) {
    const Polynomial image = apply_monomial_operator(cat.row_ops[r], F_);
    for (const auto& [m, c] : image.terms()) {
      cat.matrix.at(static_cast<int>(r), col_of.at(m)) = c;
    }
  }
  return cat;
}

bool GorensteinAlgebra::annihilates(const Polynomial& op) const {
  return apply_operator(op, F_).is_zero();
}

GorensteinAlgebra::AnnihilatorKernel GorensteinAlgebra::annihilator_kernel(int k) const {
  const Catalecticant cat = catalecticant(k);
  AnnihilatorKernel out;
  out.candidates = cat.row_ops;
  // Kernel vectors are row combinations: null space of the transpose.
  out.vectors = kernel(cat.matrix.transposed());
  for (const auto& v : out.vectors) {
    Polynomial op(n_vars());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        op = op + Polynomial::monomial(n_vars(), out.candidates[i], v[i]);
      }
    }
    out.operators.push_back(std::move(op));
  }
  return out;
}

bool verify_octahedron_reduction(const Polynomial& F) {
  const int n = std::max(6, F.n_vars());
  const Polynomial G = F.with_n_vars(n);
  auto dv = [&](int v) {
    return Polynomial::monomial(n, Monomial::variable(v), 1);
  };
  auto dv2 = [&](int v) {
    return Polynomial::monomial(n, Monomial::variable(v, 2), 1);
  };
  const std::vector<Polynomial> generators = {
      dv(1) - dv(6), dv(2) - dv(4), dv(3) - dv(5), dv2(1), dv2(2), dv2(3)};
  for (const auto& g : generators) {
    if (!apply_operator(g, G).is_zero()) return false;
  }
  if (G.is_zero() || !G.is_homogeneous()) return false;
  GorensteinAlgebra algebra(G);
  return algebra.hilbert() == std::vector<int>{1, 3, 3, 1};
}

}  // namespace lef
