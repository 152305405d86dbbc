#include "lefschetz.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "core/algebra.hpp"
#include "core/certify.hpp"
#include "core/face_poset.hpp"
#include "core/fixtures.hpp"
#include "core/hessian.hpp"
#include "core/linalg.hpp"
#include "core/report.hpp"
#include "core/serialize.hpp"

using nlohmann::json;

struct lef_poset {
  lef::FacePoset poset;
};

struct lef_algebra {
  lef::GorensteinAlgebra algebra;
};

struct lef_matrix {
  lef::ExactMatrix matrix;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
lef_status guarded(Fn&& fn) {
  try {
    fn();
    return LEF_OK;
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return LEF_ERR_PARSE;
  } catch (const lef::ParseError& e) {
    g_last_error = e.what();
    return LEF_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return LEF_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return LEF_ERR_DOMAIN;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return LEF_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LEF_ERR_INTERNAL;
  }
}

lef_status require(bool condition, const char* message) {
  if (condition) return LEF_OK;
  g_last_error = message;
  return LEF_ERR_INVALID_ARGUMENT;
}

std::vector<lef::Rat> point_from_json_text(const char* point_json) {
  return lef::rat_vector_from_json(json::parse(point_json));
}

json slp_to_json(const lef::SlpCertificate& cert) {
  json degrees = json::array();
  for (const auto& rec : cert.degrees) {
    degrees.push_back({{"k", rec.k},
                       {"det", lef::rat_str(rec.det)},
                       {"nonzero", rec.nonzero()}});
  }
  return {{"form", lef::rat_vector_to_json(cert.form)},
          {"socle_degree", cert.socle_degree},
          {"degrees", degrees},
          {"verdict", cert.verdict}};
}

json hrr_to_json(const lef::HrrCertificate& cert) {
  return {{"form", lef::rat_vector_to_json(cert.form)},
          {"degree", cert.degree},
          {"method", cert.method},
          {"kernel_dim", cert.kernel_dim},
          {"signature", lef::inertia_to_json(cert.signature)},
          {"verdict", cert.verdict}};
}

}  // namespace

extern "C" {

const char* lef_version(void) { return "0.1.0"; }

const char* lef_status_name(lef_status status) {
  switch (status) {
    case LEF_OK: return "ok";
    case LEF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LEF_ERR_PARSE: return "parse error";
    case LEF_ERR_DOMAIN: return "domain error";
    case LEF_ERR_IO: return "io error";
    case LEF_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* lef_last_error(void) { return g_last_error.c_str(); }

void lef_string_free(char* s) { std::free(s); }

lef_status lef_poset_builtin(const char* name, lef_poset** out) {
  if (lef_status st = require(name && out, "null argument"); st != LEF_OK) return st;
  return guarded([&] { *out = new lef_poset{lef::builtin_poset(name)}; });
}

lef_status lef_poset_from_json(const char* json_text, lef_poset** out) {
  if (lef_status st = require(json_text && out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *out = new lef_poset{lef::poset_from_json(json::parse(json_text))};
  });
}

void lef_poset_free(lef_poset* poset) { delete poset; }

lef_status lef_poset_to_json(const lef_poset* poset, char** json_out) {
  if (lef_status st = require(poset && json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *json_out = dup_string(lef::dump_json(lef::poset_to_json(poset->poset)));
  });
}

lef_status lef_poset_validate(const lef_poset* poset, int check_euler,
                              char** report_json_out) {
  if (lef_status st = require(poset && report_json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    const lef::ValidationReport report =
        lef::validate(poset->poset, check_euler != 0);
    *report_json_out = dup_string(lef::dump_json(lef::validation_to_json(report)));
  });
}

lef_status lef_poset_edges(const lef_poset* poset, char** edges_json_out) {
  if (lef_status st = require(poset && edges_json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    json edges = json::array();
    for (const auto& [a, b] : lef::derive_edges(poset->poset)) {
      edges.push_back({a, b});
    }
    *edges_json_out = dup_string(lef::dump_json(edges));
  });
}

lef_status lef_poset_face_polynomial(const lef_poset* poset, char** poly_json_out) {
  if (lef_status st = require(poset && poly_json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *poly_json_out = dup_string(
        lef::dump_json(lef::polynomial_to_json(lef::face_polynomial(poset->poset))));
  });
}

lef_status lef_algebra_from_poset(const lef_poset* poset, lef_algebra** out) {
  if (lef_status st = require(poset && out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *out = new lef_algebra{lef::GorensteinAlgebra(lef::face_polynomial(poset->poset))};
  });
}

lef_status lef_algebra_from_polynomial_json(const char* poly_json, lef_algebra** out) {
  if (lef_status st = require(poly_json && out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *out = new lef_algebra{
        lef::GorensteinAlgebra(lef::polynomial_from_json(json::parse(poly_json)))};
  });
}

lef_status lef_algebra_octahedron_reduced(lef_algebra** out) {
  if (lef_status st = require(out != nullptr, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *out = new lef_algebra{
        lef::GorensteinAlgebra(lef::fixtures::octahedron_reduced_generator())};
  });
}

void lef_algebra_free(lef_algebra* algebra) { delete algebra; }

lef_status lef_algebra_socle_degree(const lef_algebra* algebra, int* out) {
  if (lef_status st = require(algebra && out, "null argument"); st != LEF_OK) return st;
  *out = algebra->algebra.socle_degree();
  return LEF_OK;
}

lef_status lef_algebra_hilbert(lef_algebra* algebra, char** json_out) {
  if (lef_status st = require(algebra && json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *json_out = dup_string(lef::dump_json(json(algebra->algebra.hilbert())));
  });
}

lef_status lef_algebra_basis(lef_algebra* algebra, int degree, char** json_out) {
  if (lef_status st = require(algebra && json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *json_out = dup_string(
        lef::dump_json(lef::monomial_list_to_json(algebra->algebra.basis(degree))));
  });
}

lef_status lef_algebra_set_basis(lef_algebra* algebra, int degree,
                                 const char* basis_json) {
  if (lef_status st = require(algebra && basis_json, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    algebra->algebra.set_basis(degree,
                               lef::monomial_list_from_json(json::parse(basis_json)));
  });
}

lef_status lef_algebra_annihilator_membership(lef_algebra* algebra,
                                              const char* op_poly_json,
                                              int* is_member) {
  if (lef_status st = require(algebra && op_poly_json && is_member, "null argument");
      st != LEF_OK) {
    return st;
  }
  return guarded([&] {
    const lef::Polynomial op = lef::polynomial_from_json(json::parse(op_poly_json));
    *is_member = algebra->algebra.annihilates(op) ? 1 : 0;
  });
}

lef_status lef_algebra_annihilator_kernel(lef_algebra* algebra, int degree,
                                          char** json_out) {
  if (lef_status st = require(algebra && json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    const auto kernel = algebra->algebra.annihilator_kernel(degree);
    json vectors = json::array();
    for (const auto& v : kernel.vectors) vectors.push_back(lef::rat_vector_to_json(v));
    json doc = {{"degree", degree},
                {"candidates", lef::monomial_list_to_json(kernel.candidates)},
                {"vectors", vectors},
                {"dimension", kernel.vectors.size()}};
    *json_out = dup_string(lef::dump_json(doc));
  });
}

lef_status lef_algebra_verify_octahedron_reduction(lef_algebra* algebra, int* ok) {
  if (lef_status st = require(algebra && ok, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *ok = lef::verify_octahedron_reduction(algebra->algebra.dual_generator()) ? 1 : 0;
  });
}

lef_status lef_hessian_at(lef_algebra* algebra, int degree, const char* point_json,
                          lef_matrix** out) {
  if (lef_status st = require(algebra && point_json && out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    const auto point = point_from_json_text(point_json);
    *out = new lef_matrix{lef::hessian_at(algebra->algebra, degree, point)};
  });
}

lef_status lef_hessian_symbolic(lef_algebra* algebra, int degree, char** json_out) {
  if (lef_status st = require(algebra && json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    const lef::SymbolicHessian h = lef::hessian_symbolic(algebra->algebra, degree);
    json rows = json::array();
    for (int i = 0; i < h.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < h.dim(); ++j) {
        row.push_back(lef::polynomial_to_json(h.at(i, j)));
      }
      rows.push_back(std::move(row));
    }
    json doc = {{"degree", h.degree},
                {"basis", lef::monomial_list_to_json(h.basis)},
                {"entries", rows}};
    *json_out = dup_string(lef::dump_json(doc));
  });
}

lef_status lef_mixed_hessian_at(lef_algebra* algebra, int degree,
                                const char* point_json, lef_matrix** out) {
  if (lef_status st = require(algebra && point_json && out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    const auto point = point_from_json_text(point_json);
    *out = new lef_matrix{lef::mixed_hessian_at(algebra->algebra, degree, point)};
  });
}

lef_status lef_matrix_from_json(const char* json_text, lef_matrix** out) {
  if (lef_status st = require(json_text && out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *out = new lef_matrix{lef::matrix_from_json(json::parse(json_text))};
  });
}

void lef_matrix_free(lef_matrix* matrix) { delete matrix; }

lef_status lef_matrix_to_json(const lef_matrix* matrix, char** json_out) {
  if (lef_status st = require(matrix && json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *json_out = dup_string(lef::dump_json(lef::matrix_to_json(matrix->matrix)));
  });
}

lef_status lef_matrix_dims(const lef_matrix* matrix, int* rows, int* cols) {
  if (lef_status st = require(matrix && rows && cols, "null argument"); st != LEF_OK) return st;
  *rows = matrix->matrix.rows();
  *cols = matrix->matrix.cols();
  return LEF_OK;
}

lef_status lef_matrix_det(const lef_matrix* matrix, char** rational_out) {
  if (lef_status st = require(matrix && rational_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *rational_out = dup_string(lef::rat_str(lef::determinant(matrix->matrix)));
  });
}

lef_status lef_matrix_rank(const lef_matrix* matrix, int* rank_out) {
  if (lef_status st = require(matrix && rank_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] { *rank_out = lef::rank(matrix->matrix); });
}

lef_status lef_matrix_charpoly(const lef_matrix* matrix, char** json_out) {
  if (lef_status st = require(matrix && json_out, "null argument"); st != LEF_OK) return st;
  return guarded([&] {
    *json_out = dup_string(lef::dump_json(lef::unipoly_to_json(lef::charpoly(matrix->matrix))));
  });
}

lef_status lef_matrix_signature(const lef_matrix* matrix, int* n_plus, int* n_minus,
                                int* n_zero) {
  if (lef_status st = require(matrix && n_plus && n_minus && n_zero, "null argument");
      st != LEF_OK) {
    return st;
  }
  return guarded([&] {
    const lef::Inertia sig = lef::signature(matrix->matrix);
    *n_plus = sig.n_plus;
    *n_minus = sig.n_minus;
    *n_zero = sig.n_zero;
  });
}

lef_status lef_slp_certify(lef_algebra* algebra, const char* point_json,
                           char** cert_json_out) {
  if (lef_status st = require(algebra && point_json && cert_json_out, "null argument");
      st != LEF_OK) {
    return st;
  }
  return guarded([&] {
    const auto point = point_from_json_text(point_json);
    *cert_json_out =
        dup_string(lef::dump_json(slp_to_json(lef::slp_certify(algebra->algebra, point))));
  });
}

lef_status lef_hrr_degree1(lef_algebra* algebra, const char* point_json,
                           char** cert_json_out) {
  if (lef_status st = require(algebra && point_json && cert_json_out, "null argument");
      st != LEF_OK) {
    return st;
  }
  return guarded([&] {
    const auto point = point_from_json_text(point_json);
    *cert_json_out =
        dup_string(lef::dump_json(hrr_to_json(lef::hrr_degree1(algebra->algebra, point))));
  });
}

lef_status lef_hrr_at_degree(lef_algebra* algebra, const char* point_json, int degree,
                             char** cert_json_out) {
  if (lef_status st = require(algebra && point_json && cert_json_out, "null argument");
      st != LEF_OK) {
    return st;
  }
  return guarded([&] {
    const auto point = point_from_json_text(point_json);
    *cert_json_out = dup_string(
        lef::dump_json(hrr_to_json(lef::hrr_at_degree(algebra->algebra, point, degree))));
  });
}

lef_status lef_find_lefschetz_element(lef_algebra* algebra, const char* strategy,
                                      uint64_t seed, int budget,
                                      const char* candidates_json,
                                      char** result_json_out) {
  if (lef_status st = require(algebra && strategy && result_json_out, "null argument");
      st != LEF_OK) {
    return st;
  }
  return guarded([&] {
    lef::SleOptions options;
    options.strategy = lef::parse_sle_strategy(strategy);
    options.seed = seed;
    options.budget = budget;
    if (candidates_json) {
      std::vector<std::vector<lef::Rat>> candidates;
      for (const auto& c : json::parse(candidates_json)) {
        candidates.push_back(lef::rat_vector_from_json(c));
      }
      options.candidates = std::move(candidates);
    }
    const lef::SleResult result = lef::find_lefschetz_element(algebra->algebra, options);
    json doc = {{"found", result.found},
                {"tried", result.tried},
                {"strategy", lef::sle_strategy_name(options.strategy)},
                {"seed", seed},
                {"budget", budget}};
    if (result.found) {
      doc["form"] = lef::rat_vector_to_json(result.form);
      doc["certificate"] = slp_to_json(*result.certificate);
    }
    *result_json_out = dup_string(lef::dump_json(doc));
  });
}

lef_status lef_report(const char* solid, const char* poset_json,
                      const char* fixtures_dir, uint64_t seed, char** markdown_out,
                      char** doc_json_out, int* all_passed) {
  if (lef_status st = require((solid || poset_json) && markdown_out && doc_json_out &&
                                  all_passed,
                              "null argument");
      st != LEF_OK) {
    return st;
  }
  return guarded([&] {
    const lef::FacePoset poset = solid
                                     ? lef::builtin_poset(solid)
                                     : lef::poset_from_json(json::parse(poset_json));
    lef::ReportOptions options;
    options.fixtures_dir = fixtures_dir ? fixtures_dir : "";
    options.seed = seed;
    const lef::ReportResult result = lef::run_report(poset, options);
    *markdown_out = dup_string(result.markdown);
    *doc_json_out = dup_string(lef::dump_json(result.doc));
    *all_passed = result.all_passed ? 1 : 0;
  });
}

}  // extern "C"
