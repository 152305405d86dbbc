#include "core/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lef {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("malformed rational: '" + s + "'");
  }
  Rat r{Int(num), Int(den)};
  if (r.get_den() == 0) {
    throw ParseError("zero denominator in rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r{num, den};
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  out.canonicalize();
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int falling_factorial(unsigned long n, unsigned long k) {
  Int out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= Int(n - i);
  return out;
}

std::vector<Rat> parse_rat_vector(const std::vector<std::string>& parts) {
  std::vector<Rat> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(parse_rat(p));
  return out;
}

}  // namespace lef
