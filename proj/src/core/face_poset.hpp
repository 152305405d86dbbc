#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/polynomial.hpp"

namespace lef {

// Combinatorial face data of a polyhedron: vertices labelled 1..n_vertices
// and facets given as vertex sets. Edges are derived, not stored.
struct FacePoset {
  std::string name;
  int n_vertices = 0;
  std::vector<std::vector<int>> faces;  // each sorted ascending
};

const std::vector<std::string>& builtin_poset_names();
bool is_builtin_poset(const std::string& name);
// The five Platonic solids with their fixed vertex labelings. Throws
// std::invalid_argument for unknown names.
FacePoset builtin_poset(const std::string& name);

// Vertex pairs contained in exactly two faces.
std::vector<std::pair<int, int>> derive_edges(const FacePoset& poset);

struct ValidationReport {
  std::vector<std::string> violations;
  bool regular = false;        // all faces share one cardinality
  int face_cardinality = 0;    // meaningful when regular
  int n_edges = 0;
  bool euler_checked = false;
  bool euler_ok = false;
  bool ok() const { return violations.empty(); }
};

// Checks structural invariants; when check_euler is set, additionally checks
// V - E + F = 2 with the derived edge set.
ValidationReport validate(const FacePoset& poset, bool check_euler = false);

// F_P: one squarefree monomial per face, the product of the face's vertex
// variables. Throws if the poset fails validation.
Polynomial face_polynomial(const FacePoset& poset);

}  // namespace lef
