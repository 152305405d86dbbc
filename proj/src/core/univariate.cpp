#include "core/univariate.hpp"

#include <stdexcept>

namespace lef {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::from_descending_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> asc;
  asc.reserve(coeffs.size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) asc.push_back(Rat(*it));
  return UniPoly(std::move(asc));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[i];
}

Rat UniPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> out = coeffs_;
  for (auto& c : out) c = -c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rat& c) const {
  if (c == 0) return UniPoly();
  std::vector<Rat> out = coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  }
  return UniPoly(std::move(out));
}

Rat UniPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading());
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  UniPoly out = UniPoly::constant(1);
  for (int i = 0; i < e; ++i) out = out * (*this);
  return out;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c == 0) continue;
    const bool first = out.empty();
    const Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      out += (c < 0) ? "-" : "";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (i == 0 || abs != 1) out += rat_str(abs);
    if (i > 0) {
      if (abs != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const Rat lead = b.leading();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / lead;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] -= f * b.coeff(j);
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  if (x.is_zero()) return y;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = y;
    y = r.is_zero() ? r : r.monic();
  }
  return x;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = p.monic();
  if (f.degree() == 0) return out;
  UniPoly d = gcd(f, f.derivative());
  if (d.degree() == 0) {
    out.push_back({f, 1});
    return out;
  }
  UniPoly u = divmod(f, d).first.monic();
  UniPoly v = divmod(f.derivative(), d).first;
  UniPoly w = v - u.derivative();
  int i = 1;
  while (u.degree() > 0) {
    UniPoly h = gcd(u, w);
    if (h.degree() > 0) out.push_back({h, i});
    u = divmod(u, h).first.monic();
    UniPoly v2 = divmod(w, h).first;
    w = v2 - u.derivative();
    ++i;
  }
  return out;
}

namespace {

int sign_of(const Rat& r) { return sgn(r); }

// Sign changes of the Sturm chain at x = 0 minus an endpoint selector.
// kind: 0 evaluates at 0, +1 at +infinity, -1 at -infinity.
int sign_changes(const std::vector<UniPoly>& chain, int kind) {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s;
    if (kind == 0) {
      s = sign_of(q.coeff(0));
    } else {
      s = sign_of(q.leading());
      if (kind < 0 && q.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

RealRootCounts count_real_roots_signed(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
  RealRootCounts counts;
  // Split off the root at zero with its multiplicity.
  std::vector<Rat> c = p.coeffs();
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  counts.zero = static_cast<int>(shift);
  UniPoly q(std::vector<Rat>(c.begin() + static_cast<long>(shift), c.end()));
  if (q.degree() == 0) return counts;
  for (const auto& [factor, mult] : squarefree_decomposition(q)) {
    std::vector<UniPoly> chain{factor, factor.derivative()};
    while (chain.back().degree() > 0) {
      UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
      if (r.is_zero()) break;
      r = -r;
      // Scale by a positive constant only; signs along the chain matter.
      Rat lead = r.leading();
      if (lead < 0) lead = -lead;
      chain.push_back(r.scaled(Rat(1) / lead));
    }
    const int at_minus_inf = sign_changes(chain, -1);
    const int at_zero = sign_changes(chain, 0);
    const int at_plus_inf = sign_changes(chain, +1);
    counts.positive += mult * (at_zero - at_plus_inf);
    counts.negative += mult * (at_minus_inf - at_zero);
  }
  return counts;
}

}  // namespace lef
