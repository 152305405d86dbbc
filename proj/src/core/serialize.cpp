#include "core/serialize.hpp"

#include <stdexcept>

namespace lef {

using nlohmann::json;

json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("expected rational as string or integer");
}

json rat_vector_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat_to_json(r));
  return out;
}

std::vector<Rat> rat_vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

json monomial_to_json(const Monomial& m) {
  json out = json::array();
  for (int v : m.to_vars()) out.push_back(v);
  return out;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected monomial as array of variable indices");
  std::vector<int> vars;
  for (const auto& e : j) vars.push_back(e.get<int>());
  return Monomial::from_vars(vars);
}

json monomial_list_to_json(const std::vector<Monomial>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(monomial_to_json(m));
  return out;
}

std::vector<Monomial> monomial_list_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of monomials");
  std::vector<Monomial> out;
  for (const auto& e : j) out.push_back(monomial_from_json(e));
  return out;
}

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [v, e] : m.factors()) exps[std::to_string(v)] = e;
    terms.push_back({{"exps", exps}, {"coef", rat_str(c)}});
  }
  return {{"n_vars", p.n_vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  const int n_vars = j.at("n_vars").get<int>();
  Polynomial out(n_vars);
  for (const auto& term : j.at("terms")) {
    std::vector<int> vars;
    for (const auto& [key, value] : term.at("exps").items()) {
      const int v = std::stoi(key);
      const int e = value.get<int>();
      if (e < 0) throw std::invalid_argument("negative exponent in polynomial");
      for (int i = 0; i < e; ++i) vars.push_back(v);
    }
    out = out + Polynomial::monomial(n_vars, Monomial::from_vars(vars),
                                     rat_from_json(term.at("coef")));
  }
  return out;
}

json poset_to_json(const FacePoset& p) {
  json faces = json::array();
  for (const auto& f : p.faces) faces.push_back(f);
  return {{"name", p.name}, {"n_vertices", p.n_vertices}, {"faces", faces}};
}

FacePoset poset_from_json(const json& j) {
  FacePoset p;
  p.name = j.value("name", "");
  p.n_vertices = j.at("n_vertices").get<int>();
  for (const auto& f : j.at("faces")) {
    std::vector<int> face;
    for (const auto& v : f) face.push_back(v.get<int>());
    std::sort(face.begin(), face.end());
    p.faces.push_back(std::move(face));
  }
  return p;
}

json validation_to_json(const ValidationReport& r) {
  return {{"ok", r.ok()},
          {"violations", r.violations},
          {"regular", r.regular},
          {"face_cardinality", r.face_cardinality},
          {"n_edges", r.n_edges},
          {"euler_checked", r.euler_checked},
          {"euler_ok", r.euler_ok}};
}

json matrix_to_json(const ExactMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected matrix as array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(j.at(i).at(c));
  }
  return m;
}

json unipoly_to_json(const UniPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rat_str(c));
  return {{"coefficients", coeffs}};
}

UniPoly unipoly_from_json(const json& j) {
  const json& arr = j.is_array() ? j : j.at("coefficients");
  std::vector<Rat> coeffs;
  for (const auto& c : arr) coeffs.push_back(rat_from_json(c));
  return UniPoly(std::move(coeffs));
}

json inertia_to_json(const Inertia& s) {
  return {{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

json parse_json(const std::string& text) {
  return json::parse(text);  // throws nlohmann::json::parse_error
}

std::string dump_json(const json& j) { return j.dump(); }

}  // namespace lef
