#include <doctest.h>

#include <vector>

#include "core/certify.hpp"
#include "core/face_poset.hpp"
#include "core/polynomial.hpp"
#include "core/serialize.hpp"

using namespace lef;

namespace {

Polynomial var(int n, int v) {
  return Polynomial::monomial(n, Monomial::variable(v), 1);
}

// Small random polynomial with squarefree support when requested.
Polynomial random_poly(SplitMix64& rng, int n_vars, int n_terms, int max_deg,
                       bool squarefree) {
  Polynomial p(n_vars);
  for (int t = 0; t < n_terms; ++t) {
    const int deg = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(max_deg));
    std::vector<int> vars;
    for (int i = 0; i < deg; ++i) {
      vars.push_back(1 + static_cast<int>(rng.next() % static_cast<unsigned>(n_vars)));
    }
    Monomial m = Monomial::from_vars(vars);
    if (squarefree && !m.is_squarefree()) continue;
    long coef = static_cast<long>(rng.next() % 11) - 5;
    if (coef == 0) coef = 1;
    p = p + Polynomial::monomial(n_vars, m, Rat(coef));
  }
  return p;
}

std::vector<Rat> random_point(SplitMix64& rng, int n) {
  std::vector<Rat> pt(static_cast<std::size_t>(n));
  for (auto& c : pt) {
    c = make_rat(static_cast<long>(rng.next() % 9) - 4,
                 1 + static_cast<long>(rng.next() % 3));
  }
  return pt;
}

}  // namespace

TEST_CASE("monomial canonical order") {
  const Monomial x1 = Monomial::variable(1);
  const Monomial x2 = Monomial::variable(2);
  const Monomial x1x2 = Monomial::from_vars({1, 2});
  const Monomial x1sq = Monomial::variable(1, 2);
  CHECK(x1 < x2);
  CHECK(x1 < x1x2);           // degree first
  CHECK(x1sq < x1x2);         // within degree 2, larger exponent on x1 first
  CHECK(x1x2 < Monomial::from_vars({1, 3}));
  CHECK(Monomial::from_vars({1, 3}) < Monomial::from_vars({2, 3}));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(squarefree_monomials_of_degree(4, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == x1sq);
  CHECK(squarefree_monomials_of_degree(3, 2).front() == x1x2);
}

TEST_CASE("addition") {
  const Polynomial f_tetra = face_polynomial(builtin_poset("tetrahedron"));
  CHECK((var(4, 1) + (-var(4, 1))).is_zero());
  const Polynomial doubled = var(4, 1) * var(4, 2) + var(4, 1) * var(4, 2);
  CHECK(doubled.coefficient(Monomial::from_vars({1, 2})) == 2);
  CHECK(f_tetra + Polynomial::zero(4) == f_tetra);
  CHECK_THROWS_AS(var(3, 1) + var(4, 1), std::invalid_argument);
}

TEST_CASE("multiplication") {
  const int n = 2;
  const Polynomial diff = (var(n, 1) + var(n, 2)) * (var(n, 1) - var(n, 2));
  CHECK(diff == Polynomial::monomial(n, Monomial::variable(1, 2), 1) -
                    Polynomial::monomial(n, Monomial::variable(2, 2), 1));

  const std::vector<Rat> ones(4, Rat(1));
  const Polynomial ell = linear_form(ones);
  const Polynomial sq = ell * ell;
  for (int i = 1; i <= 4; ++i) {
    CHECK(sq.coefficient(Monomial::variable(i, 2)) == 1);
    for (int j = i + 1; j <= 4; ++j) {
      CHECK(sq.coefficient(Monomial::from_vars({i, j})) == 2);
    }
  }

  const Polynomial f_hexa = face_polynomial(builtin_poset("hexahedron"));
  CHECK(Polynomial::constant(8, 1) * f_hexa == f_hexa);
  CHECK_THROWS_AS(var(3, 1) * var(4, 1), std::invalid_argument);
}

TEST_CASE("apply_operator examples") {
  const Polynomial f_tetra = face_polynomial(builtin_poset("tetrahedron"));

  const Polynomial d1d2 = Polynomial::monomial(4, Monomial::from_vars({1, 2}), 1);
  CHECK(apply_operator(d1d2, f_tetra) == var(4, 3) + var(4, 4));

  const Polynomial d1sq = Polynomial::monomial(4, Monomial::variable(1, 2), 1);
  CHECK(apply_operator(d1sq, f_tetra).is_zero());

  // l_a^s applied to a squarefree F of degree s gives s! F(a).
  const std::vector<Rat> a(4, Rat(1));
  const Polynomial result = apply_power(linear_form(a), 3, f_tetra);
  CHECK(result == Polynomial::constant(4, 24));  // 3! * 4
}

TEST_CASE("evaluate examples") {
  const Polynomial f_tetra = face_polynomial(builtin_poset("tetrahedron"));
  const Polynomial f_hexa = face_polynomial(builtin_poset("hexahedron"));
  const FacePoset dodeca = builtin_poset("dodecahedron");
  const Polynomial f_dodeca = face_polynomial(dodeca);

  CHECK(f_tetra.evaluate(std::vector<Rat>(4, Rat(1))) == 4);
  CHECK(f_hexa.evaluate(std::vector<Rat>(8, Rat(1))) == 6);

  // Independent count: faces avoiding vertex 1 contribute 1 at the point with
  // a zero in coordinate 1 and ones elsewhere.
  int avoiding = 0;
  for (const auto& face : dodeca.faces) {
    bool has_v1 = false;
    for (int v : face) has_v1 |= (v == 1);
    if (!has_v1) ++avoiding;
  }
  std::vector<Rat> c(20, Rat(1));
  c[0] = 0;
  CHECK(f_dodeca.evaluate(c) == avoiding);
  CHECK(avoiding == 9);

  CHECK_THROWS_AS(f_tetra.evaluate(std::vector<Rat>(3, Rat(1))),
                  std::invalid_argument);
}

TEST_CASE("operator identities hold on random inputs") {
  SplitMix64 rng{20250809};
  for (int round = 0; round < 30; ++round) {
    const int n = 3 + static_cast<int>(rng.next() % 3);
    const Polynomial F = random_poly(rng, n, 6, 4, false);
    const int i = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(n));
    const int j = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(n));
    const Polynomial di = var(n, i);
    const Polynomial dj = var(n, j);

    // Partial derivatives commute.
    CHECK(apply_operator(di, apply_operator(dj, F)) ==
          apply_operator(dj, apply_operator(di, F)));

    // Composition agrees with multiplication of operators.
    const Polynomial d1 = random_poly(rng, n, 3, 2, false);
    const Polynomial d2 = random_poly(rng, n, 3, 2, false);
    CHECK(apply_operator(d1 * d2, F) == apply_operator(d1, apply_operator(d2, F)));
  }
}

TEST_CASE("squarefree derivative identity and evaluation homomorphism") {
  SplitMix64 rng{7};
  for (int round = 0; round < 20; ++round) {
    const int n = 3 + static_cast<int>(rng.next() % 3);
    Polynomial F = random_poly(rng, n, 5, 3, true);
    if (F.is_zero() || !F.is_homogeneous()) {
      // Keep only the top-degree part to make it homogeneous.
      Polynomial top(n);
      for (const auto& [m, c] : F.terms()) {
        if (m.degree() == F.degree()) top = top + Polynomial::monomial(n, m, c);
      }
      F = top;
    }
    if (F.is_zero()) continue;
    const std::vector<Rat> a = random_point(rng, n);
    const int s = F.degree();
    const Polynomial lhs = apply_power(linear_form(a), s, F);
    CHECK(lhs == Polynomial::constant(n, Rat(factorial(static_cast<unsigned>(s))) *
                                             F.evaluate(a)));

    const Polynomial p = random_poly(rng, n, 4, 3, false);
    const Polynomial q = random_poly(rng, n, 4, 3, false);
    CHECK((p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a));
  }
}

TEST_CASE("polynomial json round trip") {
  const Polynomial f = face_polynomial(builtin_poset("octahedron"))
                           .scaled(Rat(3, 7)) +
                       Polynomial::monomial(6, Monomial::variable(2, 3), Rat(-5, 2));
  const auto j = polynomial_to_json(f);
  CHECK(polynomial_from_json(j) == f);
  CHECK(j.at("n_vars") == 6);
}
