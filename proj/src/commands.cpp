#include "qsep/commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>

#include "qsep/io.hpp"
#include "qsep/oracles.hpp"

namespace qsep {

namespace fs = std::filesystem;

RunReport cmd_reduce(const ReduceArgs& args) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.command = "reduce";
    report.inputs = {args.graph_path};

    const Graph g = parse_graph(read_file(args.graph_path));
    const CliqueInstance inst(g, args.c);

    // Degenerate instances never reach the gadget construction.
    if (args.c == 1) {
        report.checks.push_back({"answered_without_reduction", true, 1.0, 0.0,
                                 "c = 1: YES (every non-empty graph has a 1-clique)"});
        return report;
    }
    if (g.edge_count() == 0) {
        report.checks.push_back({"answered_without_reduction", true, 0.0, 0.0,
                                 "edgeless graph: omega = 1 < c, NO"});
        return report;
    }

    const RsdfInstance rsdf = clique_to_rsdf(inst);
    const WoptInstance wopt = rsdf_to_wopt(rsdf, args.M_target);
    const WmemParams wmem = wopt_to_wmem_params(wopt);

    fs::create_directories(args.out_dir);
    const std::string rsdf_path = (fs::path(args.out_dir) / "rsdf.json").string();
    const std::string wopt_path = (fs::path(args.out_dir) / "wopt.json").string();
    const std::string wmem_path = (fs::path(args.out_dir) / "wmem_params.json").string();
    write_file(rsdf_path, rsdf_to_json(rsdf).dump(2) + "\n");
    write_file(wopt_path, wopt_to_json(wopt).dump(2) + "\n");
    write_file(wmem_path, wmem_params_to_json(wmem).dump(2) + "\n");
    report.outputs = {rsdf_path, wopt_path, wmem_path};

    const double norm_dev = std::abs(wopt.c_matrix->mat.norm() - wopt.delta);
    const double chat_dev =
        std::abs(wopt.c_hat.norm() - std::sqrt(2.0 * g.edge_count()));
    report.checks.push_back({"c_norm_eq_delta", norm_dev <= 1e-12, norm_dev, 1e-12,
                             "delta = " + format_real(wopt.delta)});
    report.checks.push_back({"chat_norm_eq_sqrt_2e", chat_dev <= 1e-10, chat_dev, 1e-10,
                             "|c_hat| = " + format_real(wopt.c_hat.norm())});
    report.checks.push_back({"beta_below_epsilon", wmem.beta < wopt.epsilon, wmem.beta,
                             wopt.epsilon,
                             "gamma = " + format_real(wopt.gamma) +
                                 ", epsilon = " + format_real(wopt.epsilon) +
                                 ", beta = " + format_real(wmem.beta)});
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

OracleResult cmd_oracle(const OracleArgs& args) {
    const nlohmann::json doc = nlohmann::json::parse(read_file(args.state_path));
    const int d = args.M * args.N;
    const GeneratorBasis basis = su_generators(d);

    BlochVector y;
    if (doc.contains("coords")) {
        y = bloch_from_json(doc);
        if (y.dim != d) throw ValidationError("Bloch vector dimension != M*N");
    } else if (doc.contains("entries")) {
        const HermitianOperator rho(matrix_from_json(doc));
        if (rho.dim() != d) throw ValidationError("state dimension != M*N");
        y = density_to_bloch(rho, basis);
    } else {
        throw ParseError("state document needs \"coords\" or \"entries\"");
    }

    OracleResult out;
    out.yes = wmem_ppt_oracle(y, args.beta, args.M, args.N);
    const HermitianOperator rho = bloch_to_density(y, basis);
    out.is_state = min_eigenvalue(rho.mat) >= -1e-9;
    out.min_pt_eigenvalue =
        min_eigenvalue(partial_transpose_b(rho.mat, args.M, args.N));
    return out;
}

EbCheckResult cmd_eb_check(const std::string& channel_path) {
    const nlohmann::json doc = nlohmann::json::parse(read_file(channel_path));
    const ChoiOperator choi = choi_from_channel_json(doc);
    EbCheckResult out;
    out.cp = choi.cp;
    out.tp = choi.tp;
    out.min_eigenvalue = choi.min_eigenvalue;
    out.tp_deviation = choi.tp_deviation;
    const Matrix jb = partial_trace_a(choi.J.mat, choi.M, choi.N);
    out.kappa_b = condition_number(HermitianOperator((jb + Matrix(jb.adjoint())) / 2.0)).kappa;

    if (!choi.cp) {
        out.eb_verdict = "not a channel (not completely positive)";
        return out;
    }
    const PptVerdict ppt = ppt_test(choi.J, choi.M, choi.N);
    const bool exact = (choi.M == 2 && choi.N == 2) || (choi.M == 2 && choi.N == 3);
    if (!ppt.passes)
        out.eb_verdict = "no";
    else
        out.eb_verdict = exact ? "yes" : "inconclusive (ppt holds)";
    return out;
}

ExponentReport cmd_exponents() {
    ExponentReport r;
    r.n_drop = worst_case_log2_beta(1e4) - worst_case_log2_beta(2e4);
    r.m_slope = hardness_exponent_M(140, {1e4, 2e4});
    r.n_slope = hardness_exponent_N(1e9, {1e4, 2e4});
    return r;
}

}  // namespace qsep
