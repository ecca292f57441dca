#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qsep/commands.hpp"
#include "qsep/io.hpp"

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const qsep::NumericError*>(&e)) return qsep::kExitNumeric;
    if (dynamic_cast<const qsep::ValidationError*>(&e)) return qsep::kExitUsage;
    return qsep::kExitNumeric;
}

void print_report(const qsep::RunReport& report, bool as_json) {
    if (as_json) {
        std::cout << qsep::report_to_json(report).dump(2) << "\n";
        return;
    }
    for (const auto& c : report.checks)
        std::printf("[%s] %-28s measured=%-13.6g tol=%-10.4g %s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance,
                    c.note.c_str());
    std::printf("%s: %s in %.2fs\n", report.command.c_str(),
                report.all_passed() ? "all checks passed" : "CHECKS FAILED",
                report.wall_time_s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique-to-separability reduction toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t seed = 0;
    double tol = 1e-12;
    int restarts = 50;
    int max_iters = 500;
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    app.add_option("--seed", seed, "PRNG seed (all commands are deterministic per seed)");
    app.add_option("--tol", tol, "optimizer improvement tolerance");
    app.add_option("--restarts", restarts, "optimizer restarts");
    app.add_option("--max-iters", max_iters, "optimizer iteration cap");

    auto* reduce = app.add_subcommand("reduce", "map a graph file to instance files");
    reduce->fallthrough();
    qsep::ReduceArgs rargs;
    reduce->add_option("graph", rargs.graph_path, "DIMACS or JSON graph file")->required();
    reduce->add_option("--c", rargs.c, "clique threshold")->required();
    int m_target = 0;
    reduce->add_option("--m-target", m_target, "pad the gadget to this many blocks");
    reduce->add_option("--out-dir", rargs.out_dir, "output directory");

    auto* verify = app.add_subcommand("verify", "run the invariant corpus");
    verify->fallthrough();
    std::string only;
    std::vector<std::string> instance_files;
    unsigned jobs = 2;
    verify->add_option("--only", only, "run checks whose name contains this substring");
    verify->add_option("--instances", instance_files, "recheck emitted instance files");
    verify->add_option("--jobs", jobs, "worker pool width");
    std::string report_path;
    verify->add_option("--report", report_path, "also write the JSON report here");
    std::string query_log_path;
    verify->add_option("--query-log", query_log_path,
                       "write membership-demo oracle queries here as JSON lines");

    auto* oracle = app.add_subcommand("oracle", "separability membership verdict");
    oracle->fallthrough();
    qsep::OracleArgs oargs;
    oracle->add_option("state", oargs.state_path, "Bloch vector or state JSON file")
        ->required();
    oracle->add_option("--M", oargs.M, "first subsystem dimension")->required();
    oracle->add_option("--N", oargs.N, "second subsystem dimension")->required();
    oracle->add_option("--beta", oargs.beta, "membership error parameter");

    auto* ebcheck = app.add_subcommand("eb-check", "channel CP/TP/EB verdicts");
    ebcheck->fallthrough();
    std::string channel_path;
    ebcheck->add_option("channel", channel_path, "Kraus or Choi JSON file")->required();

    auto* exponents = app.add_subcommand("exponents", "hardness exponent fits");
    exponents->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? qsep::kExitUsage : qsep::kExitOk;
    }

    try {
        if (reduce->parsed()) {
            if (m_target > 0) rargs.M_target = m_target;
            const qsep::RunReport report = qsep::cmd_reduce(rargs);
            print_report(report, as_json);
            return report.all_passed() ? qsep::kExitOk : qsep::kExitCheckFailed;
        }
        if (verify->parsed()) {
            qsep::RunReport report;
            if (!instance_files.empty()) {
                report = qsep::verify_instance_files(instance_files);
            } else {
                qsep::VerifyOptions vopts;
                vopts.optim.seed = seed;
                vopts.optim.restarts = restarts;
                vopts.optim.max_iters = max_iters;
                vopts.optim.improve_tol = tol;
                vopts.seed = seed;
                vopts.jobs = jobs;
                vopts.query_log_path = query_log_path;
                report = qsep::run_verify(vopts, only);
            }
            if (!report_path.empty())
                qsep::write_file(report_path,
                                 qsep::report_to_json(report).dump(2) + "\n");
            print_report(report, as_json);
            return report.all_passed() ? qsep::kExitOk : qsep::kExitCheckFailed;
        }
        if (oracle->parsed()) {
            const qsep::OracleResult res = qsep::cmd_oracle(oargs);
            if (as_json) {
                std::printf(
                    "{\"answer\":\"%s\",\"min_pt_eigenvalue\":%.17g,\"is_state\":%s}\n",
                    res.yes ? "YES" : "NO", res.min_pt_eigenvalue,
                    res.is_state ? "true" : "false");
            } else {
                std::printf("%s  (min PT eigenvalue %.6g%s)\n", res.yes ? "YES" : "NO",
                            res.min_pt_eigenvalue,
                            res.is_state ? "" : "; input is not a state");
            }
            return qsep::kExitOk;
        }
        if (ebcheck->parsed()) {
            const qsep::EbCheckResult res = qsep::cmd_eb_check(channel_path);
            if (as_json) {
                std::printf("{\"cp\":%s,\"tp\":%s,\"min_eigenvalue\":%.17g,"
                            "\"tp_deviation\":%.17g,\"kappa_b\":%.17g,\"eb\":\"%s\"}\n",
                            res.cp ? "true" : "false", res.tp ? "true" : "false",
                            res.min_eigenvalue, res.tp_deviation, res.kappa_b,
                            res.eb_verdict.c_str());
            } else {
                std::printf("CP: %s (min eigenvalue %.6g)\nTP: %s (deviation %.3g)\n"
                            "kappa(Tr_A J): %.6g\nEB: %s\n",
                            res.cp ? "yes" : "no", res.min_eigenvalue,
                            res.tp ? "yes" : "no", res.tp_deviation, res.kappa_b,
                            res.eb_verdict.c_str());
            }
            return qsep::kExitOk;
        }
        if (exponents->parsed()) {
            const qsep::ExponentReport r = qsep::cmd_exponents();
            if (as_json)
                std::printf("{\"n_drop\":%.17g,\"m_slope\":%.17g,\"n_slope\":%.17g}\n",
                            r.n_drop, r.m_slope, r.n_slope);
            else
                std::printf("log2 drop per doubling of n: %.4f\nM-slope: %.4f\n"
                            "N-slope: %.4f\n",
                            r.n_drop, r.m_slope, r.n_slope);
            return qsep::kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return qsep::kExitUsage;
}
