#include "core/polynomial.hpp"

#include <stdexcept>

namespace lef {

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("n_vars must be >= 0");
}

Polynomial Polynomial::constant(int n_vars, const Rat& c) {
  Polynomial p(n_vars);
  p.add_term(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::monomial(int n_vars, const Monomial& m, const Rat& c) {
  if (m.max_var() > n_vars) {
    throw std::invalid_argument("monomial variable exceeds n_vars");
  }
  Polynomial p(n_vars);
  p.add_term(m, c);
  return p;
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Terms are ordered by ascending degree first.
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

bool Polynomial::is_squarefree_support() const {
  for (const auto& [m, c] : terms_) {
    if (!m.is_squarefree()) return false;
  }
  return true;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_) {
    throw std::invalid_argument("polynomial addition: mismatched n_vars");
  }
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(n_vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_) {
    throw std::invalid_argument("polynomial subtraction: mismatched n_vars");
  }
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_) {
    throw std::invalid_argument("polynomial multiplication: mismatched n_vars");
  }
  Polynomial out(n_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out(n_vars_);
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

Rat Polynomial::evaluate(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != n_vars_) {
    throw std::invalid_argument("evaluate: point length != n_vars");
  }
  Rat sum = 0;
  for (const auto& [m, c] : terms_) {
    Rat prod = c;
    for (const auto& [v, e] : m.factors()) {
      prod *= rat_pow(point[v - 1], static_cast<unsigned long>(e));
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::with_n_vars(int n) const {
  Polynomial out(n);
  for (const auto& [m, c] : terms_) {
    if (m.max_var() > n) {
      throw std::invalid_argument("with_n_vars: variable index exceeds new n_vars");
    }
    out.terms_.emplace(m, c);
  }
  return out;
}

std::string Polynomial::str(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.is_one()) {
      out += rat_str(c);
    } else if (c == 1) {
      out += m.str(symbol);
    } else {
      out += rat_str(c) + "*" + m.str(symbol);
    }
  }
  return out;
}

Polynomial apply_monomial_operator(const Monomial& op, const Polynomial& F) {
  Polynomial out(F.n_vars());
  for (const auto& [m, c] : F.terms_) {
    if (!op.divides(m)) continue;
    Int factor = 1;
    for (const auto& [v, e] : op.factors()) {
      factor *= falling_factorial(static_cast<unsigned long>(m.exponent(v)),
                                  static_cast<unsigned long>(e));
    }
    out.add_term(op.quotient_into(m), c * Rat(factor));
  }
  return out;
}

Polynomial apply_operator(const Polynomial& D, const Polynomial& F) {
  if (D.n_vars() != F.n_vars()) {
    throw std::invalid_argument("apply_operator: mismatched n_vars");
  }
  Polynomial out(F.n_vars());
  for (const auto& [op, c] : D.terms_) {
    Polynomial piece = apply_monomial_operator(op, F);
    for (const auto& [m, pc] : piece.terms_) out.add_term(m, c * pc);
  }
  return out;
}

Polynomial linear_form(std::span<const Rat> coeffs) {
  Polynomial out(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) {
      out = out + Polynomial::monomial(out.n_vars(),
                                       Monomial::variable(static_cast<int>(i) + 1),
                                       coeffs[i]);
    }
  }
  return out;
}

Polynomial apply_power(const Polynomial& L, int times, const Polynomial& F) {
  if (times < 0) throw std::invalid_argument("apply_power: negative exponent");
  Polynomial out = F;
  for (int i = 0; i < times; ++i) out = apply_operator(L, out);
  return out;
}

}  // namespace lef
