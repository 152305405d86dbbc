#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "core/face_poset.hpp"
#include "core/linalg.hpp"

namespace lef {

struct ReportOptions {
  // Directory holding <solid>.json expectation files. Empty means: use the
  // LEF_FIXTURES_DIR environment variable, falling back to the compiled-in
  // default. A missing file is not an error; the report then carries no
  // expectation diffs.
  std::string fixtures_dir;
  std::uint64_t seed = 1;
};

struct ReportResult {
  std::string markdown;
  nlohmann::json doc;
  int n_claims = 0;
  int n_passed = 0;
  bool has_expectations = false;
  bool all_passed = true;  // vacuously true without expectations
};

// Recomputes the full certification story for one solid (combinatorics,
// Hilbert function, Hessian determinants, spectra, SLP/HRR certificates) and
// diffs the results against the stored expectation file.
ReportResult run_report(const FacePoset& poset, const ReportOptions& options);

std::string resolve_fixtures_dir(const std::string& requested);

}  // namespace lef
