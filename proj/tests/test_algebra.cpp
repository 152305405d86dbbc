#include <doctest.h>

#include "core/algebra.hpp"
#include "core/certify.hpp"
#include "core/face_poset.hpp"
#include "core/fixtures.hpp"
#include "oracles.hpp"

using namespace lef;

namespace {

GorensteinAlgebra algebra_for(const std::string& name) {
  return GorensteinAlgebra(face_polynomial(builtin_poset(name)));
}

Polynomial dvar(int n, int v) {
  return Polynomial::monomial(n, Monomial::variable(v), 1);
}

Polynomial dpair(int n, int i, int j) {
  return Polynomial::monomial(n, Monomial::from_vars({i, j}), 1);
}

}  // namespace

TEST_CASE("hilbert functions") {
  CHECK(algebra_for("tetrahedron").hilbert() == std::vector<int>{1, 4, 4, 1});
  CHECK(algebra_for("hexahedron").hilbert() == std::vector<int>{1, 8, 18, 8, 1});
  CHECK(algebra_for("octahedron").hilbert() == std::vector<int>{1, 3, 3, 1});
  CHECK(algebra_for("icosahedron").hilbert() == std::vector<int>{1, 12, 12, 1});
}

TEST_CASE("degenerate and invalid dual generators") {
  const Polynomial constant = Polynomial::constant(3, Rat(5));
  GorensteinAlgebra a(constant);
  CHECK(a.socle_degree() == 0);
  CHECK(a.hilbert() == std::vector<int>{1});
  CHECK(a.basis(0) == std::vector<Monomial>{Monomial::one()});

  CHECK_THROWS_AS(GorensteinAlgebra(Polynomial::zero(2)), std::domain_error);
  const Polynomial mixed = dvar(2, 1) + Polynomial::constant(2, 1);
  CHECK_THROWS_AS(GorensteinAlgebra{mixed}, std::domain_error);
}

TEST_CASE("non-squarefree generators use the full candidate set") {
  // F = x1^2 x2^2 presents R[d1,d2]/(d1^3, d2^3).
  const Polynomial F =
      Polynomial::monomial(2, Monomial::from_vars({1, 1, 2, 2}), 1);
  GorensteinAlgebra algebra(F);
  CHECK(!algebra.squarefree());
  CHECK(algebra.hilbert() == std::vector<int>{1, 2, 3, 2, 1});
  CHECK(algebra.basis(2) == std::vector<Monomial>{Monomial::variable(1, 2),
                                                  Monomial::from_vars({1, 2}),
                                                  Monomial::variable(2, 2)});

  const std::vector<Rat> ones(2, Rat(1));
  const SlpCertificate cert = slp_certify(algebra, ones);
  CHECK(cert.verdict);
  CHECK(cert.degrees[1].det == -12);  // [[2,4],[4,2]]
  CHECK(cert.degrees[2].det != 0);
}

TEST_CASE("hilbert functions are palindromic on random squarefree generators") {
  SplitMix64 rng{31415};
  int tested = 0;
  while (tested < 10) {
    const int n = 4 + static_cast<int>(rng.next() % 2);
    const int deg = 2 + static_cast<int>(rng.next() % 2);
    Polynomial F(n);
    const auto candidates = squarefree_monomials_of_degree(n, deg);
    for (const auto& m : candidates) {
      if (rng.next() % 3 == 0) {
        F = F + Polynomial::monomial(n, m, Rat(1 + static_cast<long>(rng.next() % 3)));
      }
    }
    if (F.is_zero()) continue;
    ++tested;
    GorensteinAlgebra algebra(F);
    const auto& h = algebra.hilbert();
    const int s = algebra.socle_degree();
    for (int k = 0; k <= s; ++k) {
      CHECK(h[static_cast<std::size_t>(k)] == h[static_cast<std::size_t>(s - k)]);
    }
  }
}

TEST_CASE("squarefree and unrestricted catalecticants have equal rank") {
  for (const auto& name : {"tetrahedron", "octahedron", "hexahedron"}) {
    CAPTURE(name);
    GorensteinAlgebra algebra = algebra_for(name);
    for (int k = 0; k <= algebra.socle_degree(); ++k) {
      CHECK(algebra.hilbert_component_via(k, true) ==
            algebra.hilbert_component_via(k, false));
    }
  }
}

TEST_CASE("greedy bases") {
  GorensteinAlgebra octa = algebra_for("octahedron");
  CHECK(octa.basis(1) == std::vector<Monomial>{Monomial::variable(1),
                                               Monomial::variable(2),
                                               Monomial::variable(3)});

  // The dodecahedron degree-2 greedy basis is exactly the coplanar pairs.
  GorensteinAlgebra dodeca = algebra_for("dodecahedron");
  const auto pairs = fixtures::coplanar_pairs(builtin_poset("dodecahedron"));
  CHECK(pairs.size() == 90);
  CHECK(dodeca.basis(2) == pairs);
}

TEST_CASE("explicit basis hints are verified") {
  GorensteinAlgebra hexa = algebra_for("hexahedron");
  const auto lambda2 = fixtures::hexahedron_lambda2();
  REQUIRE(lambda2.size() == 18);
  hexa.set_basis(2, lambda2);
  CHECK(hexa.basis(2) == lambda2);

  // Wrong size.
  GorensteinAlgebra hexa2 = algebra_for("hexahedron");
  auto too_small = lambda2;
  too_small.pop_back();
  CHECK_THROWS_AS(hexa2.set_basis(2, too_small), std::invalid_argument);

  // Dependent set: d1d2 and d7d8 have equal images.
  auto dependent = lambda2;
  dependent[1] = Monomial::from_vars({7, 8});  // duplicates image of d1d2
  dependent[0] = Monomial::from_vars({1, 2});
  CHECK_THROWS_AS(hexa2.set_basis(2, dependent), std::invalid_argument);

  // Wrong degree entry.
  auto wrong_degree = lambda2;
  wrong_degree[0] = Monomial::variable(1);
  CHECK_THROWS_AS(hexa2.set_basis(2, wrong_degree), std::invalid_argument);
}

TEST_CASE("annihilator membership") {
  GorensteinAlgebra hexa = algebra_for("hexahedron");
  // Antipodal pairs annihilate.
  const std::vector<std::pair<int, int>> antipodal = {{1, 7}, {2, 8}, {3, 5}, {4, 6}};
  for (const auto& [i, j] : antipodal) {
    CHECK(hexa.annihilates(dpair(8, i, j)));
  }
  // The six equal-pair relations annihilate as differences.
  const std::vector<std::array<int, 4>> relations = {
      {1, 2, 7, 8}, {1, 4, 6, 7}, {1, 5, 3, 7},
      {2, 3, 5, 8}, {2, 6, 4, 8}, {3, 4, 5, 6}};
  for (const auto& [a, b, c, d] : relations) {
    CHECK(hexa.annihilates(dpair(8, a, b) - dpair(8, c, d)));
    CHECK(!hexa.annihilates(dpair(8, a, b)));
  }

  GorensteinAlgebra octa = algebra_for("octahedron");
  CHECK(octa.annihilates(dvar(6, 1) - dvar(6, 6)));
  CHECK(octa.annihilates(dvar(6, 2) - dvar(6, 4)));
  CHECK(octa.annihilates(dvar(6, 3) - dvar(6, 5)));
  CHECK(!octa.annihilates(dvar(6, 1) - dvar(6, 2)));
}

namespace {

// True iff `vec` lies in the span of the returned kernel basis.
bool in_span(const std::vector<std::vector<Rat>>& basis, std::vector<Rat> vec) {
  if (basis.empty()) return false;
  IncrementalEchelon echelon(static_cast<int>(vec.size()));
  for (const auto& b : basis) echelon.add_row(b);
  return !echelon.add_row(std::move(vec));
}

std::vector<Rat> coords(const std::vector<Monomial>& candidates,
                        const std::map<Monomial, Rat>& entries) {
  std::vector<Rat> out(candidates.size(), Rat(0));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (auto it = entries.find(candidates[i]); it != entries.end()) {
      out[i] = it->second;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("annihilator kernels") {
  GorensteinAlgebra octa = algebra_for("octahedron");
  const auto k1 = octa.annihilator_kernel(1);
  CHECK(k1.candidates.size() == 6);
  CHECK(k1.vectors.size() == 3);
  for (const auto& op : k1.operators) {
    CHECK(octa.annihilates(op));
  }
  // The three stated difference generators lie in the kernel.
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 6}, {2, 4}, {3, 5}}) {
    CHECK(in_span(k1.vectors,
                  coords(k1.candidates, {{Monomial::variable(i), Rat(1)},
                                         {Monomial::variable(j), Rat(-1)}})));
  }

  GorensteinAlgebra tetra = algebra_for("tetrahedron");
  CHECK(tetra.annihilator_kernel(1).vectors.empty());

  GorensteinAlgebra hexa = algebra_for("hexahedron");
  const auto k2 = hexa.annihilator_kernel(2);
  CHECK(k2.candidates.size() == 28);  // squarefree degree-2 monomials
  CHECK(k2.vectors.size() == 10);     // 4 vanishing pairs + 6 relations
  for (const auto& op : k2.operators) {
    CHECK(hexa.annihilates(op));
  }
  // Kernel dimension = candidates - h_k.
  CHECK(static_cast<int>(k2.vectors.size()) ==
        static_cast<int>(k2.candidates.size()) - hexa.hilbert_component(2));
  // The four vanishing pairs and the six equal-pair relations all lie in it.
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 7}, {2, 8}, {3, 5}, {4, 6}}) {
    CHECK(in_span(k2.vectors,
                  coords(k2.candidates, {{Monomial::from_vars({i, j}), Rat(1)}})));
  }
  const std::vector<std::array<int, 4>> relations = {
      {1, 2, 7, 8}, {1, 4, 6, 7}, {1, 5, 3, 7},
      {2, 3, 5, 8}, {2, 6, 4, 8}, {3, 4, 5, 6}};
  for (const auto& [a, b, c, d] : relations) {
    CHECK(in_span(k2.vectors,
                  coords(k2.candidates, {{Monomial::from_vars({a, b}), Rat(1)},
                                         {Monomial::from_vars({c, d}), Rat(-1)}})));
  }
}

TEST_CASE("octahedron reduction") {
  CHECK(verify_octahedron_reduction(face_polynomial(builtin_poset("octahedron"))));
  CHECK(!verify_octahedron_reduction(face_polynomial(builtin_poset("tetrahedron"))));

  FacePoset smaller = builtin_poset("octahedron");
  smaller.faces.pop_back();
  CHECK(!verify_octahedron_reduction(face_polynomial(smaller)));
}

TEST_CASE("poincare pairing is nondegenerate in every degree") {
  for (const auto& name : {"tetrahedron", "octahedron", "hexahedron"}) {
    CAPTURE(name);
    GorensteinAlgebra algebra = algebra_for(name);
    for (int k = 0; k <= algebra.socle_degree(); ++k) {
      const ExactMatrix pairing = oracles::poincare_pairing(algebra, k);
      CHECK(rank(pairing) == algebra.hilbert_component(k));
    }
  }
}

TEST_CASE("catalecticant structure") {
  GorensteinAlgebra octa = algebra_for("octahedron");
  const Catalecticant cat = octa.catalecticant(1);
  CHECK(cat.row_ops.size() == 6);
  CHECK(rank(cat.matrix) == 3);
  // Images of d2 and d4 coincide, so those catalecticant rows are equal.
  const int r2 = 1, r4 = 3;
  for (int c = 0; c < cat.matrix.cols(); ++c) {
    CHECK(cat.matrix.at(r2, c) == cat.matrix.at(r4, c));
  }
}
