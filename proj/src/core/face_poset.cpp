#include "core/face_poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lef {

namespace {

FacePoset make(const std::string& name, int n,
               std::vector<std::vector<int>> faces) {
  FacePoset p{name, n, std::move(faces)};
  for (auto& f : p.faces) std::sort(f.begin(), f.end());
  return p;
}

}  // namespace

const std::vector<std::string>& builtin_poset_names() {
  static const std::vector<std::string> names = {
      "tetrahedron", "hexahedron", "octahedron", "dodecahedron", "icosahedron"};
  return names;
}

bool is_builtin_poset(const std::string& name) {
  const auto& names = builtin_poset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

FacePoset builtin_poset(const std::string& name) {
  if (name == "tetrahedron") {
    return make(name, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  }
  if (name == "hexahedron") {
    return make(name, 8,
                {{1, 2, 3, 4},
                 {2, 3, 6, 7},
                 {3, 4, 7, 8},
                 {1, 4, 5, 8},
                 {1, 2, 5, 6},
                 {5, 6, 7, 8}});
  }
  if (name == "octahedron") {
    return make(name, 6,
                {{1, 2, 3},
                 {1, 3, 4},
                 {1, 4, 5},
                 {1, 2, 5},
                 {2, 3, 6},
                 {3, 4, 6},
                 {4, 5, 6},
                 {2, 5, 6}});
  }
  if (name == "dodecahedron") {
    return make(name, 20,
                {{1, 2, 3, 4, 5},
                 {1, 2, 6, 7, 19},
                 {2, 3, 7, 8, 20},
                 {3, 4, 8, 9, 16},
                 {4, 5, 9, 10, 17},
                 {1, 5, 6, 10, 18},
                 {11, 12, 13, 14, 15},
                 {11, 12, 16, 17, 9},
                 {12, 13, 17, 18, 10},
                 {13, 14, 18, 19, 6},
                 {14, 15, 19, 20, 7},
                 {11, 15, 16, 20, 8}});
  }
  if (name == "icosahedron") {
    return make(name, 12,
                {{1, 2, 3},  {1, 3, 4},  {1, 4, 5},   {3, 4, 9},   {1, 5, 6},
                 {1, 2, 6},  {2, 3, 8},  {3, 8, 9},   {2, 6, 7},   {2, 7, 8},
                 {10, 11, 12}, {4, 5, 10}, {4, 9, 10}, {5, 6, 11},  {5, 10, 11},
                 {9, 10, 12}, {8, 9, 12}, {6, 7, 11},  {7, 11, 12}, {7, 8, 12}});
  }
  throw std::invalid_argument("unknown builtin poset: '" + name + "'");
}

std::vector<std::pair<int, int>> derive_edges(const FacePoset& poset) {
  std::map<std::pair<int, int>, int> pair_count;
  for (const auto& face : poset.faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      for (std::size_t j = i + 1; j < face.size(); ++j) {
        ++pair_count[{face[i], face[j]}];
      }
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [pair, count] : pair_count) {
    if (count == 2) edges.push_back(pair);
  }
  return edges;
}

ValidationReport validate(const FacePoset& poset, bool check_euler) {
  ValidationReport report;
  if (poset.n_vertices < 1) {
    report.violations.push_back("n_vertices must be positive");
  }
  std::set<int> seen_vertices;
  std::set<std::vector<int>> seen_faces;
  for (std::size_t fi = 0; fi < poset.faces.size(); ++fi) {
    std::vector<int> face = poset.faces[fi];
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
      report.violations.push_back("face " + std::to_string(fi + 1) +
                                  " repeats a vertex");
    }
    for (int v : face) {
      if (v < 1 || v > poset.n_vertices) {
        report.violations.push_back("face " + std::to_string(fi + 1) +
                                    " has vertex " + std::to_string(v) +
                                    " outside [1, " +
                                    std::to_string(poset.n_vertices) + "]");
      } else {
        seen_vertices.insert(v);
      }
    }
    if (!seen_faces.insert(face).second) {
      report.violations.push_back("duplicate face at position " +
                                  std::to_string(fi + 1));
    }
  }
  for (int v = 1; v <= poset.n_vertices; ++v) {
    if (!seen_vertices.count(v)) {
      report.violations.push_back("vertex " + std::to_string(v) +
                                  " appears in no face");
    }
  }
  if (!poset.faces.empty()) {
    const std::size_t d = poset.faces.front().size();
    report.regular = std::all_of(
        poset.faces.begin(), poset.faces.end(),
        [d](const std::vector<int>& f) { return f.size() == d; });
    report.face_cardinality = report.regular ? static_cast<int>(d) : 0;
  }
  report.n_edges = static_cast<int>(derive_edges(poset).size());
  if (check_euler) {
    report.euler_checked = true;
    const int euler = poset.n_vertices - report.n_edges +
                      static_cast<int>(poset.faces.size());
    report.euler_ok = (euler == 2);
    if (!report.euler_ok) {
      report.violations.push_back("Euler relation V - E + F = 2 fails: " +
                                  std::to_string(euler));
    }
  }
  return report;
}

Polynomial face_polynomial(const FacePoset& poset) {
  ValidationReport report = validate(poset, /*check_euler=*/false);
  if (!report.ok()) {
    throw std::invalid_argument("invalid face poset: " + report.violations.front());
  }
  Polynomial F(poset.n_vertices);
  for (const auto& face : poset.faces) {
    F = F + Polynomial::monomial(poset.n_vertices, Monomial::from_vars(face), 1);
  }
  return F;
}

}  // namespace lef
