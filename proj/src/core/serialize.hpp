#pragma once

#include <json.hpp>

#include "core/face_poset.hpp"
#include "core/linalg.hpp"
#include "core/monomial.hpp"
#include "core/polynomial.hpp"
#include "core/rational.hpp"
#include "core/univariate.hpp"

// JSON encodings used by the CLI, the C API and the fixture files. Rationals
// are always strings ("p" or "p/q") so nothing is ever rounded.
namespace lef {

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json rat_vector_to_json(const std::vector<Rat>& v);
std::vector<Rat> rat_vector_from_json(const nlohmann::json& j);

// A monomial is a sorted list of variable indices with repetition,
// e.g. x_1^2 x_3 -> [1, 1, 3].
nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j);
nlohmann::json monomial_list_to_json(const std::vector<Monomial>& ms);
std::vector<Monomial> monomial_list_from_json(const nlohmann::json& j);

// {"n_vars": N, "terms": [{"exps": {"1": 2, "3": 1}, "coef": "3/4"}, ...]}
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// {"name": "...", "n_vertices": N, "faces": [[1,2,3], ...]}
nlohmann::json poset_to_json(const FacePoset& p);
FacePoset poset_from_json(const nlohmann::json& j);

nlohmann::json validation_to_json(const ValidationReport& r);

// Array of arrays of rational strings: [["0","2"],["2","0"]].
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

// {"coefficients": ["c0", ..., "cn"]}  (ascending powers)
nlohmann::json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

nlohmann::json inertia_to_json(const Inertia& s);

nlohmann::json parse_json(const std::string& text);
std::string dump_json(const nlohmann::json& j);

}  // namespace lef
