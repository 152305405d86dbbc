#include "core/fixtures.hpp"

namespace lef::fixtures {

std::vector<Monomial> hexahedron_lambda2() {
  const std::vector<std::pair<int, int>> pairs = {
      {1, 3}, {2, 4}, {1, 8}, {4, 5}, {2, 5}, {1, 6},
      {3, 6}, {2, 7}, {4, 7}, {3, 8}, {6, 8}, {5, 7},
      {1, 2}, {3, 4}, {1, 4}, {2, 3}, {1, 5}, {2, 6}};
  std::vector<Monomial> out;
  out.reserve(pairs.size());
  for (const auto& [i, j] : pairs) out.push_back(Monomial::from_vars({i, j}));
  return out;
}

std::vector<Monomial> coplanar_pairs(const FacePoset& poset) {
  std::vector<Monomial> out;
  for (int i = 1; i <= poset.n_vertices; ++i) {
    for (int j = i + 1; j <= poset.n_vertices; ++j) {
      bool coplanar = false;
      for (const auto& face : poset.faces) {
        bool has_i = false, has_j = false;
        for (int v : face) {
          has_i |= (v == i);
          has_j |= (v == j);
        }
        if (has_i && has_j) {
          coplanar = true;
          break;
        }
      }
      if (coplanar) out.push_back(Monomial::from_vars({i, j}));
    }
  }
  return out;
}

std::vector<Rat> all_ones(int n) {
  return std::vector<Rat>(static_cast<std::size_t>(n), Rat(1));
}

std::vector<Rat> dodecahedron_point_a() { return all_ones(20); }

std::vector<Rat> dodecahedron_point_b() {
  std::vector<Rat> b = all_ones(20);
  for (int i = 6; i <= 10; ++i) b[static_cast<std::size_t>(i - 1)] = 0;
  return b;
}

std::vector<Rat> dodecahedron_point_c() {
  std::vector<Rat> c = all_ones(20);
  c[0] = 0;
  return c;
}

Polynomial octahedron_reduced_generator() {
  return Polynomial::monomial(3, Monomial::from_vars({1, 2, 3}), 1);
}

}  // namespace lef::fixtures
