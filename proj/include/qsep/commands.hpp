#pragma once

#include <optional>
#include <string>

#include "qsep/report.hpp"
#include "qsep/verify.hpp"

namespace qsep {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitNumeric = 3,
};

struct ReduceArgs {
    std::string graph_path;
    int c = 0;
    std::optional<int> M_target;
    std::string out_dir = ".";
};

// Writes rsdf.json / wopt.json / wmem_params.json unless the instance is
// degenerate (c = 1 or an edgeless graph), which is answered directly.
RunReport cmd_reduce(const ReduceArgs& args);

struct OracleArgs {
    std::string state_path;  // Bloch vector or Hermitian state document
    int M = 2, N = 2;
    double beta = 0.01;
};

struct OracleResult {
    bool yes = false;
    double min_pt_eigenvalue = 0.0;
    bool is_state = false;
};

OracleResult cmd_oracle(const OracleArgs& args);

struct EbCheckResult {
    bool cp = false;
    bool tp = false;
    double min_eigenvalue = 0.0;
    double tp_deviation = 0.0;
    double kappa_b = 0.0;
    // "yes" / "no" / "inconclusive (ppt holds)"; exact only at 2x2 and 2x3.
    std::string eb_verdict;
};

EbCheckResult cmd_eb_check(const std::string& channel_path);

struct ExponentReport {
    double n_drop = 0.0;     // log2 beta(n) - log2 beta(2n) at n = 1e4
    double m_slope = 0.0;
    double n_slope = 0.0;
};

ExponentReport cmd_exponents();

}  // namespace qsep
