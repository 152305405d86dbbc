// lefpoly: command-line front end for the platonic-lefschetz shared library.
// Talks to the library exclusively through the C API in lefschetz.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lefschetz.h"

namespace {

using nlohmann::json;

struct PosetDeleter {
  void operator()(lef_poset* p) const { lef_poset_free(p); }
};
struct AlgebraDeleter {
  void operator()(lef_algebra* a) const { lef_algebra_free(a); }
};
struct MatrixDeleter {
  void operator()(lef_matrix* m) const { lef_matrix_free(m); }
};
using PosetPtr = std::unique_ptr<lef_poset, PosetDeleter>;
using AlgebraPtr = std::unique_ptr<lef_algebra, AlgebraDeleter>;
using MatrixPtr = std::unique_ptr<lef_matrix, MatrixDeleter>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(lef_status status) {
  if (status != LEF_OK) {
    throw UsageError(std::string(lef_status_name(status)) + ": " + lef_last_error());
  }
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lef_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1,1/2,3" -> ["1","1/2","3"] as a JSON array text.
std::string csv_to_json_array(const std::string& csv) {
  json arr = json::array();
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) arr.push_back(item);
  }
  if (arr.empty()) throw UsageError("empty coordinate list");
  return arr.dump();
}

struct GlobalOptions {
  bool json_output = false;
  std::uint64_t seed = 1;
  std::string poset_file;
};

PosetPtr load_poset(const GlobalOptions& global, const std::string& solid) {
  lef_poset* poset = nullptr;
  if (!global.poset_file.empty()) {
    check(lef_poset_from_json(read_file(global.poset_file).c_str(), &poset));
  } else if (!solid.empty()) {
    check(lef_poset_builtin(solid.c_str(), &poset));
  } else {
    throw UsageError("name a builtin solid or pass --poset FILE");
  }
  return PosetPtr(poset);
}

AlgebraPtr load_algebra(const GlobalOptions& global, const std::string& solid,
                        bool reduced) {
  lef_algebra* algebra = nullptr;
  if (reduced) {
    if (solid != "octahedron") {
      throw UsageError("--reduced applies to the octahedron only");
    }
    check(lef_algebra_octahedron_reduced(&algebra));
    return AlgebraPtr(algebra);
  }
  PosetPtr poset = load_poset(global, solid);
  check(lef_algebra_from_poset(poset.get(), &algebra));
  return AlgebraPtr(algebra);
}

void install_hint(lef_algebra* algebra, int degree, const std::string& hint_file) {
  if (hint_file.empty()) return;
  check(lef_algebra_set_basis(algebra, degree, read_file(hint_file).c_str()));
}

MatrixPtr load_matrix(const std::string& path) {
  lef_matrix* m = nullptr;
  check(lef_matrix_from_json(read_file(path).c_str(), &m));
  return MatrixPtr(m);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artinian Gorenstein algebras of polyhedral face posets: Hilbert "
               "functions, higher Hessians, strong Lefschetz and Hodge-Riemann "
               "certificates (exact arithmetic)."};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(lef_version()); });
  // Let subcommands accept the global flags (--json, --seed, --poset) after
  // the subcommand name.
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json_output,
               "machine-readable JSON output (reports print markdown otherwise)");
  app.add_option("--seed", global.seed, "seed for seeded sampling")
      ->default_val(1);
  app.add_option("--poset", global.poset_file,
                 "face poset JSON file used instead of a builtin name");

  std::string solid, hint_file, at_csv, ell_csv, out_file, strategy = "exhaustive-01";
  std::string candidates_arg, fixtures_dir, out_md, out_json, matrix_file = "-";
  int degree = 1, budget = 64;
  bool symbolic = false, reduced = false;

  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert function of the algebra");
  cmd_hilbert->add_option("solid", solid);

  auto* cmd_basis = app.add_subcommand("basis", "monomial basis of a graded piece");
  cmd_basis->add_option("solid", solid);
  cmd_basis->add_option("--degree", degree)->required();
  cmd_basis->add_option("--hint", hint_file, "basis JSON to verify and install");

  auto* cmd_hessian = app.add_subcommand("hessian", "Hessian matrix of degree k");
  cmd_hessian->add_option("solid", solid);
  cmd_hessian->add_option("--degree", degree)->required();
  cmd_hessian->add_option("--at", at_csv, "evaluation point a1,a2,...");
  cmd_hessian->add_flag("--symbolic", symbolic, "print polynomial entries");
  cmd_hessian->add_flag("--reduced", reduced, "use the reduced octahedron model");
  cmd_hessian->add_option("--hint", hint_file, "basis JSON for degree k");

  auto* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  cmd_charpoly->add_option("matrix", matrix_file, "matrix JSON file or - for stdin");
  auto* cmd_signature = app.add_subcommand("signature", "exact symmetric inertia");
  cmd_signature->add_option("matrix", matrix_file, "matrix JSON file or - for stdin");
  auto* cmd_det = app.add_subcommand("det", "exact determinant");
  cmd_det->add_option("matrix", matrix_file, "matrix JSON file or - for stdin");

  auto* cmd_slp = app.add_subcommand("slp-check", "strong Lefschetz certificate");
  cmd_slp->add_option("solid", solid);
  cmd_slp->add_option("--ell", ell_csv, "linear form coefficients a1,a2,...")->required();

  auto* cmd_hrr = app.add_subcommand("hrr-check", "Hodge-Riemann certificate");
  cmd_hrr->add_option("solid", solid);
  cmd_hrr->add_option("--ell", ell_csv)->required();
  cmd_hrr->add_option("--degree", degree)->default_val(1);

  auto* cmd_sle = app.add_subcommand("find-sle", "search for a strong Lefschetz element");
  cmd_sle->add_option("solid", solid);
  cmd_sle->add_option("--strategy", strategy, "exhaustive-01 | random-rational");
  cmd_sle->add_option("--budget", budget)->default_val(64);
  cmd_sle->add_option("--candidates", candidates_arg,
                      "JSON array of forms (inline or @file) searched in order");

  auto* cmd_report = app.add_subcommand("report", "recompute and diff expectations");
  cmd_report->add_option("solid", solid);
  cmd_report->add_option("--fixtures", fixtures_dir, "expectation file directory");
  cmd_report->add_option("--out-md", out_md, "also write markdown to a file");
  cmd_report->add_option("--out-json", out_json, "also write the JSON document");

  auto* cmd_export = app.add_subcommand("export", "write an evaluated Hessian matrix");
  cmd_export->add_option("solid", solid);
  cmd_export->add_option("--degree", degree)->required();
  cmd_export->add_option("--at", at_csv)->required();
  cmd_export->add_option("--out", out_file)->required();
  cmd_export->add_flag("--reduced", reduced, "use the reduced octahedron model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_hilbert) {
      AlgebraPtr algebra = load_algebra(global, solid, false);
      char* out = nullptr;
      check(lef_algebra_hilbert(algebra.get(), &out));
      std::cout << take_string(out) << "\n";
    } else if (*cmd_basis) {
      AlgebraPtr algebra = load_algebra(global, solid, false);
      install_hint(algebra.get(), degree, hint_file);
      char* out = nullptr;
      check(lef_algebra_basis(algebra.get(), degree, &out));
      std::cout << take_string(out) << "\n";
    } else if (*cmd_hessian) {
      AlgebraPtr algebra = load_algebra(global, solid, reduced);
      install_hint(algebra.get(), degree, hint_file);
      if (symbolic) {
        char* out = nullptr;
        check(lef_hessian_symbolic(algebra.get(), degree, &out));
        std::cout << take_string(out) << "\n";
      } else {
        if (at_csv.empty()) throw UsageError("--at is required unless --symbolic");
        lef_matrix* m = nullptr;
        check(lef_hessian_at(algebra.get(), degree, csv_to_json_array(at_csv).c_str(), &m));
        MatrixPtr matrix(m);
        char* out = nullptr;
        check(lef_matrix_to_json(matrix.get(), &out));
        std::cout << take_string(out) << "\n";
      }
    } else if (*cmd_charpoly) {
      MatrixPtr matrix = load_matrix(matrix_file);
      char* out = nullptr;
      check(lef_matrix_charpoly(matrix.get(), &out));
      std::cout << take_string(out) << "\n";
    } else if (*cmd_signature) {
      MatrixPtr matrix = load_matrix(matrix_file);
      int np = 0, nm = 0, nz = 0;
      check(lef_matrix_signature(matrix.get(), &np, &nm, &nz));
      std::cout << json({{"n_plus", np}, {"n_minus", nm}, {"n_zero", nz}}).dump()
                << "\n";
    } else if (*cmd_det) {
      MatrixPtr matrix = load_matrix(matrix_file);
      char* out = nullptr;
      check(lef_matrix_det(matrix.get(), &out));
      std::cout << json({{"det", take_string(out)}}).dump() << "\n";
    } else if (*cmd_slp) {
      AlgebraPtr algebra = load_algebra(global, solid, false);
      char* out = nullptr;
      check(lef_slp_certify(algebra.get(), csv_to_json_array(ell_csv).c_str(), &out));
      std::cout << take_string(out) << "\n";
    } else if (*cmd_hrr) {
      AlgebraPtr algebra = load_algebra(global, solid, false);
      char* out = nullptr;
      if (degree == 1) {
        check(lef_hrr_degree1(algebra.get(), csv_to_json_array(ell_csv).c_str(), &out));
      } else {
        check(lef_hrr_at_degree(algebra.get(), csv_to_json_array(ell_csv).c_str(),
                                degree, &out));
      }
      std::cout << take_string(out) << "\n";
    } else if (*cmd_sle) {
      AlgebraPtr algebra = load_algebra(global, solid, false);
      std::string candidates_json;
      if (!candidates_arg.empty()) {
        candidates_json = (candidates_arg[0] == '@')
                              ? read_file(candidates_arg.substr(1))
                              : candidates_arg;
      }
      char* out = nullptr;
      check(lef_find_lefschetz_element(
          algebra.get(), strategy.c_str(), global.seed, budget,
          candidates_json.empty() ? nullptr : candidates_json.c_str(), &out));
      const std::string text = take_string(out);
      std::cout << text << "\n";
      return json::parse(text).at("found").get<bool>() ? 0 : 1;
    } else if (*cmd_report) {
      std::string poset_json;
      if (!global.poset_file.empty()) poset_json = read_file(global.poset_file);
      char* markdown = nullptr;
      char* doc = nullptr;
      int all_passed = 0;
      check(lef_report(poset_json.empty() ? solid.c_str() : nullptr,
                       poset_json.empty() ? nullptr : poset_json.c_str(),
                       fixtures_dir.empty() ? nullptr : fixtures_dir.c_str(),
                       global.seed, &markdown, &doc, &all_passed));
      const std::string md_text = take_string(markdown);
      const std::string doc_text = take_string(doc);
      std::cout << (global.json_output ? doc_text : md_text);
      if (!global.json_output) std::cout << "\n";
      if (!out_md.empty()) std::ofstream(out_md) << md_text;
      if (!out_json.empty()) std::ofstream(out_json) << doc_text;
      return all_passed ? 0 : 1;
    } else if (*cmd_export) {
      AlgebraPtr algebra = load_algebra(global, solid, reduced);
      lef_matrix* m = nullptr;
      check(lef_hessian_at(algebra.get(), degree, csv_to_json_array(at_csv).c_str(), &m));
      MatrixPtr matrix(m);
      char* out = nullptr;
      check(lef_matrix_to_json(matrix.get(), &out));
      const std::string text = take_string(out);
      std::ofstream file(out_file);
      if (!file) throw UsageError("cannot write file: " + out_file);
      file << text << "\n";
      std::cout << json({{"written", out_file},
                         {"rows", json::parse(text).size()}})
                       .dump()
                << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
