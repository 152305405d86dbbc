#include <doctest.h>

#include "core/certify.hpp"
#include "core/linalg.hpp"
#include "core/serialize.hpp"

using namespace lef;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

ExactMatrix random_matrix(SplitMix64& rng, int n, bool symmetric) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = symmetric ? i : 0; j < n; ++j) {
      const Rat v = make_rat(static_cast<long>(rng.next() % 11) - 5,
                             1 + static_cast<long>(rng.next() % 3));
      m.at(i, j) = v;
      if (symmetric) m.at(j, i) = v;
    }
  }
  return m;
}

const ExactMatrix kTetraHessian = from_ints(
    {{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}});

}  // namespace

TEST_CASE("determinant") {
  CHECK(determinant(ExactMatrix::identity(3)) == 1);
  CHECK(determinant(kTetraHessian) == -48);  // 6 * (-2)^3
  CHECK(determinant(from_ints({{1, 2}, {2, 4}})) == 0);

  ExactMatrix frac(2, 2);
  frac.at(0, 0) = Rat(1, 2);
  frac.at(0, 1) = Rat(1, 3);
  frac.at(1, 0) = Rat(1, 5);
  frac.at(1, 1) = Rat(1, 7);
  CHECK(determinant(frac) == Rat(1, 14) - Rat(1, 15));

  CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), std::domain_error);
}

TEST_CASE("rank and kernel") {
  const ExactMatrix zero(2, 3);
  CHECK(rank(zero) == 0);
  CHECK(kernel(zero).size() == 3);

  CHECK(rank(kTetraHessian) == 4);
  CHECK(kernel(kTetraHessian).empty());

  const ExactMatrix singular = from_ints({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(singular) == 1);
  const auto null_basis = kernel(singular);
  CHECK(null_basis.size() == 2);
  for (const auto& v : null_basis) {
    Rat dot = 0;
    for (int j = 0; j < 3; ++j) dot += Rat(singular.at(0, j)) * v[static_cast<std::size_t>(j)];
    CHECK(dot == 0);
  }

  SplitMix64 rng{11};
  for (int round = 0; round < 10; ++round) {
    ExactMatrix m(3 + static_cast<int>(rng.next() % 3),
                  3 + static_cast<int>(rng.next() % 3));
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        m.at(i, j) = Rat(static_cast<long>(rng.next() % 5) - 2);
      }
    }
    const auto basis = kernel(m);
    CHECK(rank(m) + static_cast<int>(basis.size()) == m.cols());
    for (const auto& v : basis) {
      for (int i = 0; i < m.rows(); ++i) {
        Rat dot = 0;
        for (int j = 0; j < m.cols(); ++j) dot += m.at(i, j) * v[static_cast<std::size_t>(j)];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("characteristic polynomial") {
  const ExactMatrix scalar = from_ints({{7}});
  CHECK(charpoly(scalar) == UniPoly::from_descending_ints({1, -7}));

  // (x - 6)(x + 2)^3
  const UniPoly expected =
      UniPoly::from_descending_ints({1, -6}) *
      UniPoly::from_descending_ints({1, 2}).pow(3);
  CHECK(charpoly(kTetraHessian) == expected);

  SplitMix64 rng{99};
  for (int round = 0; round < 8; ++round) {
    const ExactMatrix m = random_matrix(rng, 5, false);
    CHECK(charpoly_hessenberg(m) == charpoly_faddeev_leverrier(m));
  }

  // det(M) = (-1)^n * charpoly(0).
  const ExactMatrix m = random_matrix(rng, 6, false);
  CHECK(determinant(m) == charpoly(m).coeff(0) * ((6 % 2 == 0) ? 1 : -1));
}

TEST_CASE("signature") {
  CHECK(signature(kTetraHessian) == Inertia{1, 3, 0});
  CHECK(signature(ExactMatrix::identity(4)) == Inertia{4, 0, 0});
  CHECK(signature(ExactMatrix(3, 3)) == Inertia{0, 0, 3});
  CHECK(signature(from_ints({{0, 5}, {5, 0}})) == Inertia{1, 1, 0});

  SplitMix64 rng{123};
  for (int round = 0; round < 12; ++round) {
    const int n = 2 + static_cast<int>(rng.next() % 5);
    const ExactMatrix m = random_matrix(rng, n, true);
    const Inertia congruence = signature_congruence(m);
    const Inertia sturm = signature_sturm(m);
    CAPTURE(round);
    CHECK(congruence == sturm);
    CHECK(congruence.n_plus + congruence.n_minus + congruence.n_zero == n);
    CHECK(congruence.n_zero == n - rank(m));
  }

  CHECK_THROWS_AS(signature(from_ints({{0, 1}, {2, 0}})), std::domain_error);
}

TEST_CASE("signed real root counting") {
  // x^2 (x - 3) (x + 1)^2: one positive, two negative, two zero.
  const UniPoly p = UniPoly::from_descending_ints({1, 0, 0}) *
                    UniPoly::from_descending_ints({1, -3}) *
                    UniPoly::from_descending_ints({1, 1}).pow(2);
  const RealRootCounts counts = count_real_roots_signed(p);
  CHECK(counts.positive == 1);
  CHECK(counts.negative == 2);
  CHECK(counts.zero == 2);

  // x^2 - 20 has one real root of each sign.
  const RealRootCounts irr = count_real_roots_signed(
      UniPoly::from_descending_ints({1, 0, -20}));
  CHECK(irr.positive == 1);
  CHECK(irr.negative == 1);
  CHECK(irr.zero == 0);

  // x^2 + 1 has none.
  const RealRootCounts none = count_real_roots_signed(
      UniPoly::from_descending_ints({1, 0, 1}));
  CHECK(none.positive + none.negative + none.zero == 0);
}

TEST_CASE("univariate division invariant") {
  SplitMix64 rng{55};
  for (int round = 0; round < 20; ++round) {
    std::vector<Rat> ac(1 + rng.next() % 6), bc(1 + rng.next() % 4);
    for (auto& c : ac) c = make_rat(static_cast<long>(rng.next() % 9) - 4, 1 + rng.next() % 3);
    for (auto& c : bc) c = make_rat(static_cast<long>(rng.next() % 9) - 4, 1 + rng.next() % 3);
    const UniPoly a{std::move(ac)};
    const UniPoly b{std::move(bc)};
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("verify_spectrum") {
  SpectrumClaim tetra_claim;
  tetra_claim.factors = {{UniPoly::from_descending_ints({1, -6}), 1},
                         {UniPoly::from_descending_ints({1, 2}), 3}};
  CHECK(verify_spectrum(kTetraHessian, tetra_claim));

  SpectrumClaim wrong;
  wrong.factors = {{UniPoly::from_descending_ints({1, -6}), 1},
                   {UniPoly::from_descending_ints({1, 1}), 3}};
  CHECK(!verify_spectrum(kTetraHessian, wrong));

  SpectrumClaim mismatched;
  mismatched.factors = {{UniPoly::from_descending_ints({1, -6}), 1}};
  CHECK_THROWS_AS(verify_spectrum(kTetraHessian, mismatched), std::invalid_argument);
}

TEST_CASE("solve_in_column_span") {
  const ExactMatrix b = from_ints({{1, 0}, {1, 1}, {0, 2}});
  ExactMatrix t(3, 1);
  t.at(0, 0) = 3;
  t.at(1, 0) = 5;
  t.at(2, 0) = 4;
  const ExactMatrix x = solve_in_column_span(b, t);
  CHECK(b * x == t);

  ExactMatrix outside(3, 1);
  outside.at(0, 0) = 1;
  CHECK_THROWS_AS(solve_in_column_span(b, outside), std::domain_error);
}

TEST_CASE("matrix json round trip is exact") {
  ExactMatrix m(2, 2);
  m.at(0, 0) = Rat(-3, 7);
  m.at(0, 1) = Rat(342456532992L);
  m.at(1, 0) = 0;
  m.at(1, 1) = Rat(1, 2);
  const auto j = matrix_to_json(m);
  CHECK(matrix_from_json(j) == m);
  CHECK(j[0][1] == "342456532992");
}
