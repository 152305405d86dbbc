#include "core/monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lef {

Monomial Monomial::variable(int var, int exp) {
  if (var < 1) throw std::invalid_argument("variable index must be >= 1");
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({var, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_vars(const std::vector<int>& vars) {
  std::map<int, int> exps;
  for (int v : vars) {
    if (v < 1) throw std::invalid_argument("variable index must be >= 1");
    ++exps[v];
  }
  Monomial m;
  for (const auto& [v, e] : exps) {
    m.factors_.push_back({v, e});
    m.degree_ += e;
  }
  return m;
}

bool Monomial::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.second == 1; });
}

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : factors_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_) {
    if (other.exponent(v) < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_into(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    int sub = 0;
    if (a != factors_.end() && a->first == v) {
      sub = a->second;
      ++a;
    }
    if (sub > e) throw std::invalid_argument("monomial does not divide");
    if (e - sub > 0) {
      out.factors_.push_back({v, e - sub});
      out.degree_ += e - sub;
    }
  }
  if (a != factors_.end()) throw std::invalid_argument("monomial does not divide");
  return out;
}

std::vector<int> Monomial::to_vars() const {
  std::vector<int> out;
  out.reserve(degree_);
  for (const auto& [v, e] : factors_) {
    for (int i = 0; i < e; ++i) out.push_back(v);
  }
  return out;
}

bool Monomial::operator<(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ < other.degree_;
  // Walk both sparse exponent lists in variable order; the monomial carrying
  // the larger exponent at the first differing variable precedes the other.
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second > b->second;
    ++a;
    ++b;
  }
  // Equal prefixes: degrees match, so both ended together.
  return false;
}

std::string Monomial::str(const std::string& symbol) const {
  if (is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += symbol + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

void enumerate(int n_vars, int degree, int min_var, bool squarefree,
               std::vector<int>& stack, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(Monomial::from_vars(stack));
    return;
  }
  for (int v = min_var; v <= n_vars; ++v) {
    stack.push_back(v);
    enumerate(n_vars, degree - 1, squarefree ? v + 1 : v, squarefree, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n_vars, int degree) {
  if (n_vars < 0 || degree < 0) throw std::invalid_argument("negative arguments");
  std::vector<Monomial> out;
  std::vector<int> stack;
  enumerate(n_vars, degree, 1, false, stack, out);
  return out;
}

std::vector<Monomial> squarefree_monomials_of_degree(int n_vars, int degree) {
  if (n_vars < 0 || degree < 0) throw std::invalid_argument("negative arguments");
  std::vector<Monomial> out;
  std::vector<int> stack;
  enumerate(n_vars, degree, 1, true, stack, out);
  return out;
}

}  // namespace lef
