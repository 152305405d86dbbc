#include "core/report.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "core/algebra.hpp"
#include "core/certify.hpp"
#include "core/fixtures.hpp"
#include "core/hessian.hpp"
#include "core/serialize.hpp"

#ifndef LEF_DEFAULT_FIXTURES_DIR
#define LEF_DEFAULT_FIXTURES_DIR ""
#endif

namespace lef {

using nlohmann::json;

std::string resolve_fixtures_dir(const std::string& requested) {
  if (!requested.empty()) return requested;
  if (const char* env = std::getenv("LEF_FIXTURES_DIR"); env && *env) return env;
  return LEF_DEFAULT_FIXTURES_DIR;
}

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string inertia_str(const Inertia& s) {
  return "(" + std::to_string(s.n_plus) + ", " + std::to_string(s.n_minus) +
         ", " + std::to_string(s.n_zero) + ")";
}

// Shared computation state so repeated claims against the same Hessian reuse
// each 90x90 elimination.
struct Session {
  explicit Session(const FacePoset& p)
      : poset(p), algebra(face_polynomial(p)) {}

  const FacePoset& poset;
  GorensteinAlgebra algebra;
  std::map<std::string, std::vector<Rat>> points;
  std::map<std::pair<int, std::string>, ExactMatrix> hessians;
  std::map<std::pair<int, std::string>, Rat> dets;
  std::optional<GorensteinAlgebra> reduced;  // octahedron reduced model

  GorensteinAlgebra& algebra_for(bool use_reduced) {
    if (!use_reduced) return algebra;
    if (!reduced) reduced.emplace(fixtures::octahedron_reduced_generator());
    return *reduced;
  }

  const std::vector<Rat>& point(const std::string& name) {
    auto it = points.find(name);
    if (it != points.end()) return it->second;
    if (name == "ones") {
      return points.emplace("ones", fixtures::all_ones(algebra.n_vars()))
          .first->second;
    }
    throw std::invalid_argument("unknown evaluation point '" + name + "'");
  }

  const ExactMatrix& hessian(int k, const std::string& point_name, bool use_reduced) {
    if (use_reduced && point_name != "ones") {
      throw std::invalid_argument("reduced-model claims evaluate at 'ones' only");
    }
    const std::string key_name = use_reduced ? "reduced:" + point_name : point_name;
    auto key = std::make_pair(k, key_name);
    auto it = hessians.find(key);
    if (it != hessians.end()) return it->second;
    GorensteinAlgebra& alg = algebra_for(use_reduced);
    std::vector<Rat> pt = use_reduced ? fixtures::all_ones(alg.n_vars()) : point(point_name);
    return hessians.emplace(key, hessian_at(alg, k, pt)).first->second;
  }

  const Rat& det(int k, const std::string& point_name, bool use_reduced = false) {
    const std::string key_name = use_reduced ? "reduced:" + point_name : point_name;
    auto key = std::make_pair(k, key_name);
    auto it = dets.find(key);
    if (it != dets.end()) return it->second;
    return dets.emplace(key, determinant(hessian(k, point_name, use_reduced)))
        .first->second;
  }
};

struct ClaimOutcome {
  std::string id;
  std::string kind;
  std::string provenance;
  bool pass = false;
  json expected;
  json computed;
  std::string note;
};

SpectrumClaim spectrum_from_json(const json& j) {
  SpectrumClaim claim;
  for (const auto& f : j) {
    claim.factors.push_back({unipoly_from_json(f.at("coefficients")),
                             f.at("multiplicity").get<int>()});
  }
  return claim;
}

json spectrum_to_json(const SpectrumClaim& claim) {
  json out = json::array();
  for (const auto& [f, mult] : claim.factors) {
    out.push_back({{"coefficients", unipoly_to_json(f).at("coefficients")},
                   {"multiplicity", mult}});
  }
  return out;
}

ClaimOutcome evaluate_claim(Session& s, const json& claim, std::uint64_t seed) {
  ClaimOutcome out;
  out.id = claim.at("id").get<std::string>();
  out.kind = claim.at("kind").get<std::string>();
  out.provenance = claim.value("provenance", "derived");
  out.note = claim.value("note", "");
  const bool reduced = claim.value("reduced", false);
  auto point_name = [&]() { return claim.value("point", "ones"); };

  if (out.kind == "hilbert") {
    const std::vector<int> expected = claim.at("expected").get<std::vector<int>>();
    const std::vector<int>& got = s.algebra.hilbert();
    out.expected = expected;
    out.computed = got;
    out.pass = (expected == got);
  } else if (out.kind == "edges") {
    const int expected = claim.at("expected").get<int>();
    const int got = static_cast<int>(derive_edges(s.poset).size());
    out.expected = expected;
    out.computed = got;
    out.pass = (expected == got);
  } else if (out.kind == "evaluate") {
    const Rat expected = rat_from_json(claim.at("expected"));
    const Rat got = s.algebra.dual_generator().evaluate(s.point(point_name()));
    out.expected = rat_str(expected);
    out.computed = rat_str(got);
    out.pass = (expected == got);
  } else if (out.kind == "hessian-det") {
    const int k = claim.at("degree").get<int>();
    const Rat expected = rat_from_json(claim.at("expected"));
    const Rat& got = s.det(k, point_name(), reduced);
    out.expected = rat_str(expected);
    out.computed = rat_str(got);
    out.pass = (expected == got);
  } else if (out.kind == "hessian-det-nonzero") {
    const int k = claim.at("degree").get<int>();
    const bool expected = claim.at("expected").get<bool>();
    const Rat& got = s.det(k, point_name(), reduced);
    out.expected = expected;
    out.computed = rat_str(got);
    out.pass = ((got != 0) == expected);
  } else if (out.kind == "hessian-matrix") {
    const int k = claim.at("degree").get<int>();
    const ExactMatrix expected = matrix_from_json(claim.at("expected"));
    const ExactMatrix& got = s.hessian(k, point_name(), reduced);
    out.expected = claim.at("expected");
    out.computed = matrix_to_json(got);
    out.pass = (expected == got);
  } else if (out.kind == "spectrum") {
    const int k = claim.at("degree").get<int>();
    const SpectrumClaim spec_claim = spectrum_from_json(claim.at("factors"));
    const ExactMatrix& m = s.hessian(k, point_name(), reduced);
    out.expected = spectrum_to_json(spec_claim);
    const UniPoly cp = charpoly(m);
    out.computed = unipoly_to_json(cp);
    out.pass = verify_spectrum(m, spec_claim);
  } else if (out.kind == "hessian-inertia") {
    const int k = claim.at("degree").get<int>();
    const ExactMatrix& m = s.hessian(k, point_name(), reduced);
    const Inertia got = signature(m);
    out.computed = inertia_to_json(got);
    bool pass = true;
    if (claim.contains("expected")) {
      const auto e = claim.at("expected").get<std::vector<int>>();
      const Inertia expected{e.at(0), e.at(1), e.at(2)};
      out.expected = inertia_to_json(expected);
      pass = (expected == got);
    }
    if (claim.contains("min_positive")) {
      pass = pass && (got.n_plus >= claim.at("min_positive").get<int>());
    }
    if (claim.contains("nondegenerate")) {
      pass = pass && ((got.n_zero == 0) == claim.at("nondegenerate").get<bool>());
    }
    out.pass = pass;
  } else if (out.kind == "hessian-trace") {
    const int k = claim.at("degree").get<int>();
    const Rat expected = rat_from_json(claim.at("expected"));
    const Rat got = s.hessian(k, point_name(), reduced).trace();
    out.expected = rat_str(expected);
    out.computed = rat_str(got);
    out.pass = (expected == got);
  } else if (out.kind == "slp") {
    const bool expected = claim.at("expected").get<bool>();
    SlpCertificate cert = slp_certify(s.algebra, s.point(point_name()));
    json dets = json::array();
    for (const auto& rec : cert.degrees) dets.push_back(rat_str(rec.det));
    out.expected = expected;
    out.computed = {{"verdict", cert.verdict}, {"dets", dets}};
    out.pass = (cert.verdict == expected);
    if (claim.contains("expected_dets")) {
      const auto exp_dets = claim.at("expected_dets");
      out.expected = {{"verdict", expected}, {"dets", exp_dets}};
      bool dets_ok = (exp_dets.size() == cert.degrees.size());
      for (std::size_t i = 0; dets_ok && i < cert.degrees.size(); ++i) {
        dets_ok = (rat_from_json(exp_dets.at(i)) == cert.degrees[i].det);
      }
      out.pass = out.pass && dets_ok;
    }
  } else if (out.kind == "hrr1") {
    const bool expected = claim.at("expected").get<bool>();
    HrrCertificate cert = hrr_degree1(s.algebra, s.point(point_name()));
    out.expected = expected;
    out.computed = {{"verdict", cert.verdict},
                    {"signature", inertia_to_json(cert.signature)}};
    out.pass = (cert.verdict == expected);
    if (claim.contains("expected_signature")) {
      const auto e = claim.at("expected_signature").get<std::vector<int>>();
      out.pass = out.pass && (cert.signature == Inertia{e.at(0), e.at(1), e.at(2)});
    }
  } else if (out.kind == "hrr1-positive-sample") {
    const int samples = claim.value("samples", 64);
    const bool expected = claim.at("expected").get<bool>();
    SplitMix64 rng{seed};
    bool all = true;
    for (int i = 0; i < samples; ++i) {
      const std::vector<Rat> pt = random_positive_point(rng, s.algebra.n_vars());
      all = all && hrr_degree1(s.algebra, pt).verdict;
    }
    out.expected = expected;
    out.computed = {{"samples", samples}, {"all_true", all}};
    out.pass = (all == expected);
  } else if (out.kind == "annihilator-pairs") {
    bool all = true;
    for (const auto& pair : claim.at("pairs")) {
      const Monomial m = monomial_from_json(pair);
      all = all && s.algebra.annihilates(
                       Polynomial::monomial(s.algebra.n_vars(), m, 1));
    }
    out.expected = true;
    out.computed = all;
    out.pass = all;
  } else if (out.kind == "annihilator-relations") {
    bool all = true;
    for (const auto& rel : claim.at("relations")) {
      const Monomial lhs = monomial_from_json(rel.at(0));
      const Monomial rhs = monomial_from_json(rel.at(1));
      const Polynomial op =
          Polynomial::monomial(s.algebra.n_vars(), lhs, 1) -
          Polynomial::monomial(s.algebra.n_vars(), rhs, 1);
      all = all && s.algebra.annihilates(op);
    }
    out.expected = true;
    out.computed = all;
    out.pass = all;
  } else if (out.kind == "octahedron-reduction") {
    const bool expected = claim.at("expected").get<bool>();
    const bool got = verify_octahedron_reduction(s.algebra.dual_generator());
    out.expected = expected;
    out.computed = got;
    out.pass = (expected == got);
  } else {
    throw std::invalid_argument("unknown claim kind '" + out.kind + "'");
  }
  return out;
}

json load_fixture(const std::string& dir, const std::string& solid) {
  if (dir.empty() || solid.empty()) return json();
  const std::string path = dir + "/" + solid + ".json";
  std::ifstream in(path);
  if (!in) return json();
  json j;
  in >> j;
  return j;
}

}  // namespace

ReportResult run_report(const FacePoset& poset, const ReportOptions& options) {
  ReportResult result;
  Session session(poset);
  const std::string title = poset.name.empty() ? "custom poset" : poset.name;

  const json fixture =
      load_fixture(resolve_fixtures_dir(options.fixtures_dir), poset.name);
  if (!fixture.is_null() && fixture.contains("points")) {
    for (const auto& [name, coords] : fixture.at("points").items()) {
      session.points[name] = rat_vector_from_json(coords);
    }
  }
  if (!fixture.is_null() && fixture.contains("bases")) {
    for (const auto& [degree, monomials] : fixture.at("bases").items()) {
      session.algebra.set_basis(std::stoi(degree),
                                monomial_list_from_json(monomials));
    }
  }

  std::ostringstream md;
  json doc;
  doc["solid"] = title;
  doc["seed"] = options.seed;
  md << "# Lefschetz report: " << title << "\n\n";
  md << "seed: " << options.seed << "\n\n";

  // Combinatorics.
  const ValidationReport validation = validate(poset, /*check_euler=*/true);
  md << "## Combinatorics\n\n";
  md << "vertices " << poset.n_vertices << ", edges " << validation.n_edges
     << ", faces " << poset.faces.size() << "; V - E + F = "
     << (poset.n_vertices - validation.n_edges + static_cast<int>(poset.faces.size()))
     << (validation.euler_ok ? " (closed surface check ok)" : " (Euler check failed)")
     << "\n";
  md << "regular: "
     << (validation.regular
             ? "yes, all faces have " + std::to_string(validation.face_cardinality) +
                   " vertices"
             : "no")
     << "\n\n";
  doc["combinatorics"] = validation_to_json(validation);

  // Graded algebra.
  const std::vector<int>& hilbert = session.algebra.hilbert();
  md << "## Graded algebra\n\n";
  md << "socle degree: " << session.algebra.socle_degree() << "\n";
  md << "Hilbert function: " << vec_str(hilbert) << "\n\n";
  doc["hilbert"] = hilbert;

  // Certificates at the all-ones form.
  md << "## Certificates at the all-ones form\n\n";
  const std::vector<Rat>& ones = session.point("ones");
  SlpCertificate slp = slp_certify(session.algebra, ones);
  md << "SLP certificate: " << (slp.verdict ? "true" : "false") << " (";
  json slp_json;
  {
    json degrees = json::array();
    for (std::size_t i = 0; i < slp.degrees.size(); ++i) {
      if (i) md << ", ";
      md << "det H^" << slp.degrees[i].k << " = " << rat_str(slp.degrees[i].det);
      degrees.push_back({{"k", slp.degrees[i].k},
                         {"det", rat_str(slp.degrees[i].det)},
                         {"nonzero", slp.degrees[i].nonzero()}});
    }
    slp_json = {{"form", rat_vector_to_json(slp.form)},
                {"verdict", slp.verdict},
                {"degrees", degrees}};
  }
  md << ")\n";
  const Rat f_ones = session.algebra.dual_generator().evaluate(ones);
  json hrr_json;
  if (f_ones > 0) {
    HrrCertificate hrr = hrr_degree1(session.algebra, ones);
    md << "HRR degree-1 certificate: " << (hrr.verdict ? "true" : "false")
       << " (signature of H^1 = " << inertia_str(hrr.signature) << ")\n\n";
    hrr_json = {{"verdict", hrr.verdict},
                {"signature", inertia_to_json(hrr.signature)},
                {"kernel_dim", hrr.kernel_dim}};
  } else {
    md << "HRR degree-1 certificate: skipped (F(ones) = " << rat_str(f_ones)
       << " is not positive)\n\n";
    hrr_json = {{"skipped", true}, {"value", rat_str(f_ones)}};
  }
  doc["certificates"] = {{"slp_ones", slp_json}, {"hrr1_ones", hrr_json}};

  // Expectation diffs.
  md << "## Expectation checks\n\n";
  json claims_json = json::array();
  if (fixture.is_null() || !fixture.contains("claims")) {
    md << "no expectations (no fixture file for '" << title << "')\n";
    result.has_expectations = false;
  } else {
    result.has_expectations = true;
    std::vector<std::string> annotations;
    md << "| claim | provenance | result |\n";
    md << "|---|---|---|\n";
    for (const auto& claim : fixture.at("claims")) {
      ClaimOutcome outcome = evaluate_claim(session, claim, options.seed);
      ++result.n_claims;
      if (outcome.pass) ++result.n_passed;
      md << "| " << outcome.id << " | " << outcome.provenance << " | "
         << (outcome.pass ? "PASS" : "FAIL") << " |\n";
      const std::string computed = outcome.computed.dump();
      const std::string echo =
          computed.size() <= 120 ? " (computed " + computed + ")" : "";
      if (!outcome.pass) {
        annotations.push_back(outcome.id + ": FAIL, expected " +
                              outcome.expected.dump() + echo);
      }
      if (!outcome.note.empty()) {
        annotations.push_back(outcome.id + ": " + outcome.note + echo);
      }
      json cj = {{"id", outcome.id},
                 {"kind", outcome.kind},
                 {"provenance", outcome.provenance},
                 {"pass", outcome.pass},
                 {"expected", outcome.expected},
                 {"computed", outcome.computed}};
      if (!outcome.note.empty()) cj["note"] = outcome.note;
      claims_json.push_back(std::move(cj));
    }
    md << "\n" << result.n_passed << "/" << result.n_claims << " claims passed\n";
    if (!annotations.empty()) {
      md << "\nnotes:\n";
      for (const auto& line : annotations) md << "- " << line << "\n";
    }
  }
  result.all_passed = (result.n_passed == result.n_claims);
  doc["claims"] = claims_json;
  doc["summary"] = {{"n_claims", result.n_claims},
                    {"n_passed", result.n_passed},
                    {"all_passed", result.all_passed},
                    {"has_expectations", result.has_expectations}};

  result.markdown = md.str();
  result.doc = std::move(doc);
  return result;
}

}  // namespace lef
