#include "core/hessian.hpp"

#include <stdexcept>

namespace lef {

namespace {

void check_point(const GorensteinAlgebra& algebra, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) != algebra.n_vars()) {
    throw std::invalid_argument("evaluation point length != n_vars");
  }
}

}  // namespace

SymbolicHessian hessian_symbolic(GorensteinAlgebra& algebra, int k) {
  if (k < 0 || k > algebra.socle_degree()) {
    throw std::invalid_argument("hessian degree out of range");
  }
  if (algebra.socle_degree() - 2 * k > 3) {
    throw std::domain_error(
        "symbolic Hessian entries are limited to degree <= 3; use hessian_at");
  }
  SymbolicHessian h;
  h.degree = k;
  h.basis = algebra.basis(k);
  const int dim = h.dim();
  h.entries.assign(static_cast<std::size_t>(dim) * dim,
                   Polynomial::zero(algebra.n_vars()));
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      Polynomial entry =
          apply_monomial_operator(h.basis[i] * h.basis[j], algebra.dual_generator());
      h.entries[static_cast<std::size_t>(i) * dim + j] = entry;
      h.entries[static_cast<std::size_t>(j) * dim + i] = std::move(entry);
    }
  }
  return h;
}

ExactMatrix hessian_at(GorensteinAlgebra& algebra, int k, std::span<const Rat> point) {
  if (k < 0 || k > algebra.socle_degree()) {
    throw std::invalid_argument("hessian degree out of range");
  }
  check_point(algebra, point);
  const std::vector<Monomial>& basis = algebra.basis(k);
  const int dim = static_cast<int>(basis.size());
  ExactMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      Rat value = apply_monomial_operator(basis[i] * basis[j], algebra.dual_generator())
                      .evaluate(point);
      m.at(i, j) = value;
      m.at(j, i) = value;
    }
  }
  return m;
}

ExactMatrix mixed_hessian_at(GorensteinAlgebra& algebra, int k, std::span<const Rat> point) {
  if (k < 1 || 2 * k > algebra.socle_degree() + 1) {
    throw std::invalid_argument("mixed hessian degree out of range");
  }
  check_point(algebra, point);
  const std::vector<Monomial> rows = algebra.basis(k - 1);
  const std::vector<Monomial> cols = algebra.basis(k);
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          apply_monomial_operator(rows[i] * cols[j], algebra.dual_generator())
              .evaluate(point);
    }
  }
  return m;
}

}  // namespace lef
