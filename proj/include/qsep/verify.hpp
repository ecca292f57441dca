#pragma once

#include <string>
#include <vector>

#include "qsep/oracles.hpp"
#include "qsep/report.hpp"

namespace qsep {

struct VerifyOptions {
    OptimOptions optim;          // budgets for every numeric search
    unsigned jobs = 2;           // corpus worker pool width
    std::uint64_t seed = 0;      // sampling seed (optim.seed drives the optimizers)
    std::string query_log_path;  // when set, demo oracle queries land here as JSON lines
};

// The full invariant corpus, one aggregated row per criterion:
//   motzkin_straus_corpus   simplex maximum vs closed form, n <= 6 + random n <= 8
//   g_identity_corpus       raw sphere search vs 2(1 - 1/omega) (threshold gate)
//   product_max_identity    sqrt(g) vs alternating product-state maximum, n <= 4
//   structural_exactness    gadget norms, objective support, basis cross-check
//   generator_basis         orthogonality, roundtrips, distance factor
//   end_to_end_thresholds   YES/NO soundness for all graphs n <= 5, c in 2..n
//   hardness_exponents      log-log slopes of the membership error bound
//   beta_golden_values      frozen high-precision regression of the bound
//   eb_machinery            Choi/Kraus/marker/filter/Fano properties
//   membership_demo         optimize-via-membership vs product-state verdicts
std::vector<std::string> verify_check_names();

// Runs checks whose name contains `only` (empty = all).
RunReport run_verify(const VerifyOptions& opts, const std::string& only = "");

// Structural recheck of emitted instance files (rsdf/wopt/wmem_params JSON).
RunReport verify_instance_files(const std::vector<std::string>& paths);

}  // namespace qsep
