#include "oracles.hpp"

#include <map>
#include <set>

namespace lef::oracles {

ExactMatrix image_matrix(const std::vector<Polynomial>& polys) {
  std::set<Monomial> support;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) support.insert(m);
  }
  std::map<Monomial, int> row_of;
  int idx = 0;
  for (const auto& m : support) row_of[m] = idx++;
  ExactMatrix out(idx, static_cast<int>(polys.size()));
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (const auto& [m, c] : polys[j].terms()) {
      out.at(row_of.at(m), static_cast<int>(j)) = c;
    }
  }
  return out;
}

int multiplication_map_rank(GorensteinAlgebra& algebra, int k, std::span<const Rat> a) {
  const Polynomial& F = algebra.dual_generator();
  const Polynomial ell = linear_form(a);
  const int power = algebra.socle_degree() - 2 * k;
  std::vector<Polynomial> images;
  for (const Monomial& e : algebra.basis(k)) {
    images.push_back(apply_power(ell, power, apply_monomial_operator(e, F)));
  }
  return rank(image_matrix(images));
}

ExactMatrix q1_matrix(GorensteinAlgebra& algebra, std::span<const Rat> a) {
  const Polynomial& F = algebra.dual_generator();
  const Polynomial ell = linear_form(a);
  const Polynomial g = apply_power(ell, algebra.socle_degree() - 2, F);
  const std::vector<Monomial>& basis = algebra.basis(1);
  const int dim = static_cast<int>(basis.size());
  ExactMatrix q(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const Rat value =
          -apply_monomial_operator(basis[i] * basis[j], g).constant_term();
      q.at(i, j) = value;
      q.at(j, i) = value;
    }
  }
  return q;
}

Rat q1_ell_ell(const Polynomial& F, std::span<const Rat> a) {
  const Polynomial ell = linear_form(a);
  return -apply_power(ell, F.degree(), F).constant_term();
}

ExactMatrix poincare_pairing(GorensteinAlgebra& algebra, int k) {
  const Polynomial& F = algebra.dual_generator();
  const std::vector<Monomial> rows = algebra.basis(k);
  const std::vector<Monomial> cols = algebra.basis(algebra.socle_degree() - k);
  ExactMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          apply_monomial_operator(rows[i] * cols[j], F).constant_term();
    }
  }
  return out;
}

ExactMatrix change_of_basis(GorensteinAlgebra& algebra,
                            const std::vector<Monomial>& reference,
                            const std::vector<Monomial>& basis) {
  const Polynomial& F = algebra.dual_generator();
  std::vector<Polynomial> all;
  for (const auto& m : reference) all.push_back(apply_monomial_operator(m, F));
  for (const auto& m : basis) all.push_back(apply_monomial_operator(m, F));
  const ExactMatrix joint = image_matrix(all);
  ExactMatrix ref(joint.rows(), static_cast<int>(reference.size()));
  ExactMatrix tgt(joint.rows(), static_cast<int>(basis.size()));
  for (int r = 0; r < joint.rows(); ++r) {
    for (std::size_t j = 0; j < reference.size(); ++j) {
      ref.at(r, static_cast<int>(j)) = joint.at(r, static_cast<int>(j));
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      tgt.at(r, static_cast<int>(j)) =
          joint.at(r, static_cast<int>(reference.size() + j));
    }
  }
  return solve_in_column_span(ref, tgt);
}

}  // namespace lef::oracles
