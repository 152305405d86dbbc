#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/hessian.hpp"
#include "core/linalg.hpp"

namespace lef {

// Deterministic, platform-independent generator for seeded sampling.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
};

// A seeded positive rational point with coordinates drawn uniformly from
// {1/4, 1/3, 1/2, 1, 2, 3, 4}.
std::vector<Rat> random_positive_point(SplitMix64& rng, int n_vars);

struct SlpDegreeRecord {
  int k = 0;
  Rat det;  // det H^k(a); for k = 0 this is F(a)
  bool nonzero() const { return det != 0; }
};

// Strong Lefschetz certificate for the linear form l_a: the multiplication
// maps x l^{s-2k}: A_k -> A_{s-k} are all bijective iff every det H^k(a) is
// nonzero for 0 <= k <= s/2 (k = 0 reads F(a) != 0).
struct SlpCertificate {
  std::vector<Rat> form;
  int socle_degree = 0;
  std::vector<SlpDegreeRecord> degrees;
  bool verdict = false;
};

SlpCertificate slp_certify(GorensteinAlgebra& algebra, std::span<const Rat> a);

// Hodge-Riemann certificate at degree k: the signed form (-1)^k (e_i e_j F)(a)
// restricted to the primitive kernel Ker(x l^{s-2k+1}) must be positive
// definite. At degree one (with F(a) > 0) this is equivalent to H^1(a) having
// signature (1, h_1 - 1, 0) on all of A_1.
struct HrrCertificate {
  std::vector<Rat> form;
  int degree = 0;
  std::string method;   // "full-space" or "primitive-restriction"
  int kernel_dim = 0;   // dimension of the primitive subspace
  Inertia signature;    // of H^1(a) (full-space) or of the restricted signed form
  bool verdict = false;
};

// Requires F(a) > 0; rejects other points.
HrrCertificate hrr_degree1(GorensteinAlgebra& algebra, std::span<const Rat> a);

// Requires F(a) != 0 and 0 <= k <= s/2. At k = 0 the primitive space is all
// of A_0 and the verdict is F(a) > 0.
HrrCertificate hrr_at_degree(GorensteinAlgebra& algebra, std::span<const Rat> a, int k);

enum class SleStrategy { kExhaustive01, kRandomRational };

SleStrategy parse_sle_strategy(const std::string& name);
std::string sle_strategy_name(SleStrategy s);

struct SleOptions {
  SleStrategy strategy = SleStrategy::kExhaustive01;
  std::uint64_t seed = 1;
  int budget = 64;
  // When given, the search runs over exactly these forms, in order, and the
  // strategy only labels the report.
  std::optional<std::vector<std::vector<Rat>>> candidates;
};

struct SleResult {
  bool found = false;
  std::vector<Rat> form;
  std::optional<SlpCertificate> certificate;
  int tried = 0;
  SleOptions options;
};

// First form passing slp_certify wins; candidates are enumerated in
// lexicographic order over {0,1}^n (exhaustive) or drawn from the seeded
// generator. Budget exhaustion is reported, not thrown.
SleResult find_lefschetz_element(GorensteinAlgebra& algebra, const SleOptions& options);

}  // namespace lef
