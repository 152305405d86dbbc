#include "core/certify.hpp"

#include <stdexcept>

namespace lef {

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Rat> random_positive_point(SplitMix64& rng, int n_vars) {
  static const Rat kValues[] = {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(1),
                                Rat(2),    Rat(3),    Rat(4)};
  std::vector<Rat> point(static_cast<std::size_t>(n_vars));
  for (auto& c : point) c = kValues[rng.next() % 7];
  return point;
}

namespace {

bool is_zero_vector(std::span<const Rat> a) {
  for (const auto& c : a) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

SlpCertificate slp_certify(GorensteinAlgebra& algebra, std::span<const Rat> a) {
  if (is_zero_vector(a)) {
    throw std::invalid_argument("slp_certify: zero linear form");
  }
  SlpCertificate cert;
  cert.form.assign(a.begin(), a.end());
  cert.socle_degree = algebra.socle_degree();
  cert.verdict = true;
  const int k_max = algebra.socle_degree() / 2;
  for (int k = 0; k <= k_max; ++k) {
    SlpDegreeRecord record;
    record.k = k;
    record.det = determinant(hessian_at(algebra, k, a));
    if (!record.nonzero()) cert.verdict = false;
    cert.degrees.push_back(std::move(record));
  }
  return cert;
}

HrrCertificate hrr_degree1(GorensteinAlgebra& algebra, std::span<const Rat> a) {
  const Rat value = algebra.dual_generator().evaluate(a);
  if (value <= 0) {
    throw std::domain_error("hrr_degree1 requires F(a) > 0");
  }
  HrrCertificate cert;
  cert.form.assign(a.begin(), a.end());
  cert.degree = 1;
  cert.method = "full-space";
  const int h1 = algebra.hilbert_component(1);
  const ExactMatrix k_matrix = mixed_hessian_at(algebra, 1, a);
  cert.kernel_dim = h1 - rank(k_matrix);
  cert.signature = signature(hessian_at(algebra, 1, a));
  cert.verdict = (cert.signature == Inertia{1, h1 - 1, 0});
  return cert;
}

HrrCertificate hrr_at_degree(GorensteinAlgebra& algebra, std::span<const Rat> a, int k) {
  if (k < 0 || 2 * k > algebra.socle_degree()) {
    throw std::invalid_argument("hrr degree out of range");
  }
  const Rat value = algebra.dual_generator().evaluate(a);
  if (value == 0) {
    throw std::domain_error("hrr_at_degree requires F(a) != 0");
  }
  HrrCertificate cert;
  cert.form.assign(a.begin(), a.end());
  cert.degree = k;
  cert.method = "primitive-restriction";
  if (k == 0) {
    cert.kernel_dim = 1;
    const int sign = sgn(value);
    cert.signature = sign > 0 ? Inertia{1, 0, 0} : Inertia{0, 1, 0};
    cert.verdict = value > 0;
    return cert;
  }
  const ExactMatrix mixed = mixed_hessian_at(algebra, k, a);
  const std::vector<std::vector<Rat>> null_basis = kernel(mixed);
  const int dim = static_cast<int>(null_basis.size());
  cert.kernel_dim = dim;
  const int hk = algebra.hilbert_component(k);
  ExactMatrix n(hk, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < hk; ++i) n.at(i, j) = null_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  ExactMatrix h = hessian_at(algebra, k, a);
  if (k % 2 == 1) h = h.scaled(Rat(-1));
  const ExactMatrix restricted = n.transposed() * h * n;
  cert.signature = signature(restricted);
  cert.verdict = (cert.signature == Inertia{dim, 0, 0});
  return cert;
}

SleStrategy parse_sle_strategy(const std::string& name) {
  if (name == "exhaustive-01") return SleStrategy::kExhaustive01;
  if (name == "random-rational") return SleStrategy::kRandomRational;
  throw std::invalid_argument("unknown search strategy: '" + name + "'");
}

std::string sle_strategy_name(SleStrategy s) {
  return s == SleStrategy::kExhaustive01 ? "exhaustive-01" : "random-rational";
}

SleResult find_lefschetz_element(GorensteinAlgebra& algebra, const SleOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("budget must be >= 1");
  SleResult result;
  result.options = options;
  const int n = algebra.n_vars();

  auto try_form = [&](const std::vector<Rat>& form) {
    ++result.tried;
    if (is_zero_vector(form)) return false;  // never a Lefschetz element
    SlpCertificate cert = slp_certify(algebra, form);
    if (cert.verdict) {
      result.found = true;
      result.form = form;
      result.certificate = std::move(cert);
    }
    return result.found;
  };

  if (options.candidates) {
    for (const auto& form : *options.candidates) {
      if (result.tried >= options.budget) break;
      if (try_form(form)) break;
    }
    return result;
  }

  if (options.strategy == SleStrategy::kExhaustive01) {
    if (n > 62) {
      throw std::invalid_argument("exhaustive-01 supports at most 62 variables");
    }
    const std::uint64_t total = (1ULL << n) - 1;
    for (std::uint64_t t = 1; t <= total && result.tried < options.budget; ++t) {
      std::vector<Rat> form(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        form[static_cast<std::size_t>(i)] = Rat(((t >> (n - 1 - i)) & 1) ? 1 : 0);
      }
      if (try_form(form)) break;
    }
    return result;
  }

  SplitMix64 rng{options.seed};
  while (result.tried < options.budget) {
    if (try_form(random_positive_point(rng, n))) break;
  }
  return result;
}

}  // namespace lef
