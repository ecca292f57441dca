#include "qsep/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "qsep/corpus.hpp"
#include "qsep/eb.hpp"
#include "qsep/io.hpp"
#include "qsep/sampling.hpp"

namespace qsep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t i) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

OptimOptions with_seed(const OptimOptions& base, std::uint64_t seed) {
    OptimOptions o = base;
    o.seed = seed;
    return o;
}

// Square-root lift of the uniform max-clique point, embedded into R^dim.
RealVector clique_sphere_seed(const MaxCliqueResult& mc, int dim) {
    RealVector x = RealVector::Zero(dim);
    for (int v : mc.witness) x(v) = 1.0 / std::sqrt(static_cast<double>(mc.omega));
    return x;
}

Vector embed_real(const RealVector& x, int dim) {
    Vector out = Vector::Zero(dim);
    for (Eigen::Index i = 0; i < x.size(); ++i) out(i) = x(i);
    return out;
}

std::vector<Graph> standard_corpus(std::uint64_t seed) {
    std::vector<Graph> corpus = canonical_graphs_up_to(6);
    auto rnd = random_graph_corpus(500, 2, 8, seed);
    corpus.insert(corpus.end(), std::make_move_iterator(rnd.begin()),
                  std::make_move_iterator(rnd.end()));
    return corpus;
}

// --- criterion 1: simplex maximum against the clique-number closed form ---

CheckRow check_motzkin_straus(const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    const auto corpus = standard_corpus(opts.seed);
    std::vector<double> dev(corpus.size(), 0.0);
    std::vector<bool> ok(corpus.size(), true);
    parallel_for(corpus.size(), opts.jobs, [&](std::size_t i) {
        const Graph& g = corpus[i];
        const int omega = max_clique_bruteforce(g).omega;
        const double expected = 0.5 * (1.0 - 1.0 / omega);
        const auto res = motzkin_straus_max(g, with_seed(opts.optim, mix_seed(opts.seed, i)));
        dev[i] = std::abs(res.value - expected);
        ok[i] = res.converged;
    });
    double worst = 0.0;
    bool all_ok = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        worst = std::max(worst, dev[i]);
        all_ok = all_ok && ok[i];
    }
    const double elapsed = seconds_since(t0);
    CheckRow row{"motzkin_straus_corpus", worst <= 1e-6 && all_ok && elapsed < 180.0, worst,
                 1e-6,
                 std::to_string(corpus.size()) + " graphs, " + std::to_string(elapsed) + "s"};
    return row;
}

// --- criterion 2: raw sphere search validates the derived thresholds ---

CheckRow check_g_identity(const VerifyOptions& opts) {
    const auto corpus = standard_corpus(opts.seed);
    std::vector<double> dev(corpus.size(), 0.0);
    std::vector<bool> ok(corpus.size(), true);
    parallel_for(corpus.size(), opts.jobs, [&](std::size_t i) {
        const Graph& g = corpus[i];
        const int omega = max_clique_bruteforce(g).omega;
        const double expected = 2.0 * (1.0 - 1.0 / omega);
        const OptimOptions o = with_seed(opts.optim, mix_seed(opts.seed ^ 0xABCD, i));
        SphereOptResult res;
        if (g.edge_count() == 0) {
            // Degenerate gadget: every matrix is zero and the maximum is 0.
            std::vector<RealMatrix> zeros(std::max(1, g.n() * (g.n() - 1) / 2),
                                          RealMatrix::Zero(g.n(), g.n()));
            res = eval_g(zeros, o);
        } else {
            // Deliberately the unseeded search: this is the independent gate
            // for the threshold constants, so no clique certificate is used.
            res = eval_g(clique_to_rsdf({g, 2}).B, o);
        }
        dev[i] = std::abs(res.value - expected);
        ok[i] = res.converged;
    });
    double worst = 0.0;
    bool all_ok = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        worst = std::max(worst, dev[i]);
        all_ok = all_ok && ok[i];
    }
    return CheckRow{"g_identity_corpus", worst <= 1e-6 && all_ok, worst, 1e-6,
                    std::to_string(corpus.size()) + " graphs, unseeded search"};
}

// --- criterion 3: sqrt(g) equals the product-state maximum ---

CheckRow check_product_max_identity(const VerifyOptions& opts) {
    const auto t0 = Clock::now();
    double worst = 0.0;
    bool all_ok = true;
    int count = 0;
    for (int n = 2; n <= 4; ++n) {
        for (const Graph& g : canonical_graphs(n)) {
            if (g.edge_count() == 0) continue;
            const RsdfInstance inst = clique_to_rsdf({g, 2});
            const OptimOptions o = with_seed(opts.optim, mix_seed(opts.seed, count));
            const SphereOptResult gres = eval_g(inst, o);
            const WoptInstance w = rsdf_to_wopt(inst);
            std::vector<Vector> seeds{embed_real(gres.x, w.N),
                                      embed_real(clique_sphere_seed(
                                                     max_clique_bruteforce(g), g.n()),
                                                 w.N)};
            const ProductStateResult ss =
                seesaw_product_max(*w.c_matrix, w.M, w.N, o, seeds);
            worst = std::max(worst, std::abs(std::sqrt(gres.value) - ss.value));
            all_ok = all_ok && ss.converged && gres.converged;
            ++count;
        }
    }
    const double elapsed = seconds_since(t0);
    return CheckRow{"product_max_identity", worst <= 1e-6 && all_ok && elapsed < 120.0,
                    worst, 1e-6,
                    std::to_string(count) + " instances up to M=N=7, " +
                        std::to_string(elapsed) + "s"};
}

// --- criterion 4: exact gadget structure ---

CheckRow check_structural_exactness(const VerifyOptions& opts) {
    (void)opts;
    double worst_norms = 0.0;        // tol 1e-12 family
    double worst_chat = 0.0;         // tol 1e-10
    double worst_support = 0.0;      // must be exactly zero
    double worst_basis = 0.0;        // direct generator contraction, tol 1e-12
    int count = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : canonical_graphs(n)) {
            if (g.edge_count() == 0) continue;
            for (int c = 2; c <= n; ++c) {
                const RsdfInstance inst = clique_to_rsdf({g, c});
                const WoptInstance w = rsdf_to_wopt(inst);
                worst_norms = std::max(worst_norms, std::abs(w.c_matrix->mat.norm() - w.delta));
                worst_chat = std::max(
                    worst_chat,
                    std::abs(w.c_hat.norm() - std::sqrt(2.0 * g.edge_count())));
                const int d = w.M * w.N;
                const int u_count = d * (d - 1) / 2;
                for (long i = u_count; i < w.m; ++i)
                    worst_support = std::max(worst_support, std::abs(w.c_hat(i)));
                ++count;
            }
        }
    }

    // Independent route at small dimension: contract the gadget against the
    // materialized basis and compare with the structured coefficients.
    for (int n = 2; n <= 3; ++n) {
        for (const Graph& g : canonical_graphs(n)) {
            if (g.edge_count() == 0) continue;
            const WoptInstance w = rsdf_to_wopt(clique_to_rsdf({g, 2}));
            const GeneratorBasis basis = su_generators(w.M * w.N);
            for (int i = 0; i < basis.size(); ++i) {
                const double direct =
                    0.5 *
                    (w.c_matrix->mat.transpose().cwiseProduct(basis.sigma[i])).sum().real();
                worst_basis = std::max(worst_basis, std::abs(direct - w.c_hat(i)));
            }
        }
    }

    // Padding appends zero blocks and must not move any norm.
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    const RsdfInstance k3_inst = clique_to_rsdf({k3, 3});
    const WoptInstance padded = rsdf_to_wopt(k3_inst, 6);
    worst_norms = std::max(worst_norms, std::abs(padded.c_matrix->mat.norm() -
                                                 std::sqrt(12.0)));

    const bool pass = worst_norms <= 1e-12 && worst_chat <= 1e-10 &&
                      worst_support == 0.0 && worst_basis <= 1e-12;
    return CheckRow{"structural_exactness", pass, std::max(worst_norms, worst_basis), 1e-12,
                    std::to_string(count) + " instances; chat dev " +
                        format_real(worst_chat) + "; off-support max " +
                        format_real(worst_support)};
}

// --- criterion 5: generator basis quality ---

CheckRow check_generator_basis(const VerifyOptions& opts) {
    double worst_ortho = 0.0;
    for (int d = 2; d <= 16; ++d) {
        const GeneratorBasis basis = su_generators(d);
        for (int i = 0; i < basis.size(); ++i) {
            worst_ortho = std::max(worst_ortho, std::abs(basis.sigma[i].trace()));
            for (int j = i; j < basis.size(); ++j) {
                const std::complex<double> tr =
                    (basis.sigma[i].transpose().cwiseProduct(basis.sigma[j])).sum();
                const double expected = i == j ? 2.0 : 0.0;
                worst_ortho = std::max(worst_ortho, std::abs(tr - expected));
            }
        }
    }

    std::mt19937_64 rng(opts.seed + 5);
    double worst_roundtrip = 0.0;
    for (int d : {2, 3, 4, 6}) {
        const GeneratorBasis basis = su_generators(d);
        for (int s = 0; s < 50; ++s) {
            const HermitianOperator rho(random_density_matrix(rng, d));
            const HermitianOperator back = bloch_to_density(density_to_bloch(rho, basis), basis);
            worst_roundtrip =
                std::max(worst_roundtrip, (rho.mat - back.mat).cwiseAbs().maxCoeff());
        }
    }

    const GeneratorBasis basis6 = su_generators(6);
    double worst_ratio = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const HermitianOperator rho1(random_density_matrix(rng, 6));
        const HermitianOperator rho2(random_density_matrix(rng, 6));
        const auto [frob, bloch] = bloch_distance_pair(rho1, rho2, basis6);
        worst_ratio = std::max(worst_ratio, std::abs(frob - bloch / std::sqrt(2.0)));
    }

    const double worst = std::max({worst_ortho, worst_roundtrip, worst_ratio});
    return CheckRow{"generator_basis", worst <= 1e-12, worst, 1e-12,
                    "ortho " + format_real(worst_ortho) + ", roundtrip " +
                        format_real(worst_roundtrip) + ", distance factor " +
                        format_real(worst_ratio)};
}

// --- criterion 6: end-to-end YES/NO soundness ---

// Product certificate for a clique: b is the sphere lift of the uniform clique
// point, a weights the first-row blocks by their quadratic forms.
double clique_certificate_value(const WoptInstance& w, const RsdfInstance& inst,
                                const MaxCliqueResult& mc) {
    const RealVector x = clique_sphere_seed(mc, inst.l);
    RealVector q(w.M - 1);
    for (int i = 0; i < w.M - 1; ++i)
        q(i) = i < inst.k ? x.dot(inst.B[i] * x) : 0.0;
    const double qn = q.norm();
    Vector a = Vector::Zero(w.M);
    a(0) = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < w.M - 1; ++i) a(i + 1) = q(i) / (std::sqrt(2.0) * qn);
    const Vector b = embed_real(x, w.N);
    const Vector ab = kron_vec(a, b);
    return (ab.adjoint() * w.c_matrix->mat * ab).value().real();
}

CheckRow check_end_to_end(const VerifyOptions& opts) {
    (void)opts;
    int violations = 0;
    int cases = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : canonical_graphs(n)) {
            if (g.edge_count() == 0) continue;
            const MaxCliqueResult mc = max_clique_bruteforce(g);
            for (int c = 2; c <= n; ++c) {
                const RsdfInstance inst = clique_to_rsdf({g, c});
                const WoptInstance w = rsdf_to_wopt(inst);
                const double chat_norm = std::sqrt(w.chat_norm_sq.to_double());
                const double f_identity =
                    std::sqrt(2.0 * (1.0 - 1.0 / mc.omega)) / chat_norm;
                ++cases;
                if (mc.omega >= c) {
                    const double f_cert =
                        clique_certificate_value(w, inst, mc) / chat_norm;
                    const double margin =
                        std::min(f_identity, f_cert) - (w.gamma + w.epsilon);
                    min_margin = std::min(min_margin, margin);
                    if (margin < 0.0) ++violations;
                } else {
                    const double margin = (w.gamma - w.epsilon) - f_identity;
                    min_margin = std::min(min_margin, margin);
                    if (margin < 0.0) ++violations;
                }
            }
        }
    }
    return CheckRow{"end_to_end_thresholds", violations == 0,
                    static_cast<double>(violations), 0.0,
                    std::to_string(cases) + " (graph, c) cases, min margin " +
                        format_real(min_margin)};
}

// --- criterion 7: hardness exponents ---

CheckRow check_hardness_exponents(const VerifyOptions& opts) {
    (void)opts;
    const auto t0 = Clock::now();
    const double drop = worst_case_log2_beta(1e4) - worst_case_log2_beta(2e4);
    const double slope_m = hardness_exponent_M(140, {1e4, 2e4});
    const double slope_n = hardness_exponent_N(1e9, {1e4, 2e4});
    const double elapsed = seconds_since(t0);
    const bool pass = std::abs(drop - 73.0) <= 1.0 && std::abs(slope_m + 16.0) <= 0.5 &&
                      std::abs(slope_n + 20.5) <= 0.5 && elapsed < 1.0;
    return CheckRow{"hardness_exponents", pass, drop, 1.0,
                    "drop " + format_real(drop) + ", M-slope " + format_real(slope_m) +
                        ", N-slope " + format_real(slope_n) + ", " +
                        format_real(elapsed) + "s"};
}

// --- criterion 8: frozen regression of the membership error bound ---

CheckRow check_beta_golden(const VerifyOptions& opts) {
    (void)opts;
    struct Golden {
        int M, N;
        double eps;
        double beta;
    };
    // References computed once in 113-bit arithmetic from the same (M, N, eps).
    const Golden goldens[] = {
        {2, 2, 0.5, 1.378180973993350156e-14},
        {2, 2, 0.25, 1.722726217491687694e-15},
        {2, 3, 0.5, 4.304037779672931693e-17},
        {3, 3, 0.1, 1.347399558182116132e-21},
        {2, 2, 0.9, 8.037551440329218702e-14},
        {2, 4, 1.0 / 3.0, 2.459550052962774466e-19},
        {3, 4, 0.05, 3.550324641645103066e-24},
        {4, 4, 0.125, 1.213309662516498277e-24},
        {2, 3, 0.01, 3.443230223738345569e-22},
        {5, 5, 0.7, 5.928621751205182704e-25},
    };
    double worst = 0.0;
    for (const auto& g : goldens) {
        const SepSetGeometry geo = sep_set_geometry(g.M, g.N);
        const double beta = wmem_beta(geo.inner_radius, geo.outer_radius,
                                      static_cast<double>(geo.m), g.eps);
        worst = std::max(worst, std::abs(beta / g.beta - 1.0));
    }
    return CheckRow{"beta_golden_values", worst <= 1e-15, worst, 1e-15,
                    "10 fixed (M, N, eps) tuples, relative"};
}

// --- criterion 9: entanglement-breaking machinery ---

CheckRow check_eb_machinery(const VerifyOptions& opts) {
    std::mt19937_64 rng(opts.seed + 9);
    bool pass = true;
    std::string note;

    double worst_kappa_excess = -std::numeric_limits<double>::infinity();
    for (int N = 2; N <= 5; ++N) {
        const double bound = (2.0 * N - 1.0) / (N - 1.0);
        for (int s = 0; s < 250; ++s) {
            const int M = (s % 2) ? 3 : 2;
            const HermitianOperator rho(random_density_matrix(rng, M * N));
            const HermitianOperator marked = marker_map_phi(rho, M, N);
            const Matrix rho_b = partial_trace_a(marked.mat, 2 * M, N);
            const ConditionNumber kappa = condition_number(
                HermitianOperator((rho_b + Matrix(rho_b.adjoint())) / 2.0));
            worst_kappa_excess =
                std::max(worst_kappa_excess, kappa.kappa - std::min(bound, 3.0));
            if (kappa.singular || kappa.kappa > bound + 1e-9 || kappa.kappa > 3.0 + 1e-9)
                pass = false;
        }
    }
    note += "kappa excess " + format_real(worst_kappa_excess);

    double worst_tp = 0.0;
    for (int s = 0; s < 500; ++s) {
        const int N = 2 + s % 3;
        const int M = 2 + s % 2;
        const HermitianOperator rho(random_density_matrix(rng, M * N));
        const HermitianOperator out = ebp_reduce(rho, M, N);
        const Matrix marginal = partial_trace_a(out.mat, 2 * M, N);
        worst_tp = std::max(
            worst_tp,
            (marginal - Matrix::Identity(N, N) / double(N)).cwiseAbs().maxCoeff());
        fano_encode(out, 2 * M, N);  // must accept the slice
    }
    if (worst_tp > 1e-10) pass = false;
    note += ", tp-slice " + format_real(worst_tp);

    int mismatches = 0;
    for (int s = 0; s < 500; ++s) {
        const Matrix rho_mat = (s % 2) ? random_product_mixture(rng, 2, 2, 4)
                                       : random_density_matrix(rng, 4);
        const HermitianOperator rho(rho_mat);
        const bool ppt_in = ppt_test(rho, 2, 2).passes;
        const HermitianOperator out = ebp_reduce(rho, 2, 2);
        const bool ppt_out = ppt_test(out, 4, 2).passes;
        if (ppt_in != ppt_out) ++mismatches;
    }
    if (mismatches != 0) pass = false;
    note += ", ppt mismatches " + std::to_string(mismatches);

    // Golden channels.
    double worst_golden = 0.0;
    {
        const ChoiOperator id2 =
            jamiolkowski([](const Matrix& x) { return x; }, 2, 2);
        Vector phi = Vector::Zero(4);
        phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
        worst_golden = std::max(worst_golden,
                                (id2.J.mat - Matrix(phi * phi.adjoint())).cwiseAbs().maxCoeff());
        if (!id2.cp || !id2.tp) pass = false;

        const ChoiOperator dep = jamiolkowski(
            [](const Matrix& x) { return x.trace() * Matrix::Identity(2, 2) / 2.0; }, 2, 2);
        worst_golden = std::max(
            worst_golden,
            (dep.J.mat - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff());

        const ChoiOperator transp =
            jamiolkowski([](const Matrix& x) { return Matrix(x.transpose()); }, 2, 2);
        worst_golden =
            std::max(worst_golden, std::abs(transp.min_eigenvalue - (-0.5)));
        if (transp.cp) pass = false;
    }
    if (worst_golden > 1e-12) pass = false;
    note += ", golden " + format_real(worst_golden);

    // Kraus roundtrips on random trace-preserving channels.
    double worst_kraus = 0.0;
    for (auto [M, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {4, 3}}) {
        for (int s = 0; s < 5; ++s) {
            const KrausSet original = random_tp_kraus(rng, M, N, std::min(M * N, 4));
            const ChoiOperator choi = choi_from_kraus(original);
            if (!choi.cp || !choi.tp) pass = false;
            const KrausSet rebuilt = kraus_from_choi(choi);
            worst_kraus = std::max(worst_kraus, rebuilt.completeness_deviation());
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    const Matrix unit = matrix_unit(N, k, l);
                    worst_kraus = std::max(
                        worst_kraus,
                        (original.apply(unit) - rebuilt.apply(unit)).cwiseAbs().maxCoeff());
                }
        }
    }
    if (worst_kraus > 1e-10) pass = false;
    note += ", kraus " + format_real(worst_kraus);

    // Separable states never fail the partial-transpose test.
    int false_negatives = 0;
    for (auto [M, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        for (int s = 0; s < 500; ++s) {
            const HermitianOperator rho(random_product_mixture(rng, M, N, 5));
            if (!ppt_test(rho, M, N).passes) ++false_negatives;
        }
    }
    if (false_negatives != 0) pass = false;
    note += ", sep false negatives " + std::to_string(false_negatives);

    return CheckRow{"eb_machinery", pass, worst_tp, 1e-10, note};
}

// --- criterion 10: optimize-via-membership demo ---

CheckRow check_membership_demo(const VerifyOptions& opts) {
    Graph k2(2);
    k2.add_edge(0, 1);
    const WoptInstance base = rsdf_to_wopt(clique_to_rsdf({k2, 2}));
    const SepMembershipOracle oracle(2, 2, wopt_to_wmem_params(base).beta);

    const OptimOptions o = with_seed(opts.optim, opts.seed + 10);
    const ProductStateResult ss = seesaw_product_max(*base.c_matrix, 2, 2, o);
    const double chat_norm = std::sqrt(base.chat_norm_sq.to_double());
    const double f_seesaw = ss.value / chat_norm;

    int agreements = 0, resolved = 0, inconclusive = 0, total = 0;
    std::vector<std::string> query_log;
    auto run_case = [&](double gamma) {
        WoptInstance w = base;
        w.gamma = gamma;
        WoptAnswer expected;
        if (f_seesaw >= gamma + w.epsilon)
            expected = WoptAnswer::Yes;
        else if (f_seesaw <= gamma - w.epsilon)
            expected = WoptAnswer::No;
        else
            return;  // off-promise, not a test case
        WoptDemoOptions dopts;
        dopts.seed = opts.seed + total;
        const WoptDemoResult res =
            wopt_via_membership(w, oracle, dopts, !opts.query_log_path.empty());
        query_log.insert(query_log.end(), res.query_log.begin(), res.query_log.end());
        ++total;
        if (res.answer == WoptAnswer::Inconclusive) {
            ++inconclusive;
        } else {
            ++resolved;
            if (res.answer == expected) ++agreements;
        }
    };

    run_case(base.gamma);  // the genuine YES instance
    for (int k : {-10, -8, -6, -4, -3, -2, 2, 3, 4, 6, 8, 10})
        run_case(f_seesaw + k * base.epsilon);
    run_case(sep_set_geometry(2, 2).outer_radius + 2 * base.epsilon);  // above the outer ball

    if (!opts.query_log_path.empty()) {
        std::string lines;
        for (const auto& l : query_log) lines += l + "\n";
        write_file(opts.query_log_path, lines);
    }

    const double rate = total ? static_cast<double>(inconclusive) / total : 1.0;
    const bool pass = resolved == agreements && rate <= 0.2 && total >= 10;
    return CheckRow{"membership_demo", pass, rate, 0.2,
                    std::to_string(agreements) + "/" + std::to_string(resolved) +
                        " agree, " + std::to_string(inconclusive) + "/" +
                        std::to_string(total) + " inconclusive"};
}

using CheckFn = CheckRow (*)(const VerifyOptions&);

struct NamedCheck {
    const char* name;
    CheckFn fn;
};

const NamedCheck kChecks[] = {
    {"motzkin_straus_corpus", check_motzkin_straus},
    {"g_identity_corpus", check_g_identity},
    {"product_max_identity", check_product_max_identity},
    {"structural_exactness", check_structural_exactness},
    {"generator_basis", check_generator_basis},
    {"end_to_end_thresholds", check_end_to_end},
    {"hardness_exponents", check_hardness_exponents},
    {"beta_golden_values", check_beta_golden},
    {"eb_machinery", check_eb_machinery},
    {"membership_demo", check_membership_demo},
};

}  // namespace

std::vector<std::string> verify_check_names() {
    std::vector<std::string> names;
    for (const auto& c : kChecks) names.emplace_back(c.name);
    return names;
}

RunReport run_verify(const VerifyOptions& opts, const std::string& only) {
    const auto t0 = Clock::now();
    RunReport report;
    report.command = "verify";
    for (const auto& check : kChecks) {
        if (!only.empty() && std::string(check.name).find(only) == std::string::npos)
            continue;
        report.checks.push_back(check.fn(opts));
    }
    report.wall_time_s = seconds_since(t0);
    return report;
}

RunReport verify_instance_files(const std::vector<std::string>& paths) {
    const auto t0 = Clock::now();
    RunReport report;
    report.command = "verify";
    report.inputs = paths;
    for (const auto& path : paths) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(path));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
        const std::string type = doc.value("type", "");
        if (type == "rsdf") {
            const RsdfInstance inst = rsdf_from_json(doc);
            double sum = 0.0;
            for (const auto& b : inst.B) sum += b.squaredNorm();
            const double dev = std::abs(sum - inst.sum_norm_sq.to_double());
            report.checks.push_back(
                {path + ":sum_norm_sq", dev <= 1e-12, dev, 1e-12, ""});
        } else if (type == "wopt") {
            const WoptInstance w = wopt_from_json(doc);
            const double chat_dev =
                std::abs(w.c_hat.squaredNorm() - w.chat_norm_sq.to_double());
            report.checks.push_back({path + ":chat_norm", chat_dev <= 1e-10, chat_dev,
                                     1e-10, ""});
            if (w.c_matrix) {
                const double norm_dev = std::abs(w.c_matrix->mat.norm() - w.delta);
                report.checks.push_back(
                    {path + ":c_norm_eq_delta", norm_dev <= 1e-12, norm_dev, 1e-12, ""});
            }
            // Re-derive gamma and epsilon in extended precision.
            const long double hi = std::sqrt((w.zeta + w.eta).to_long_double());
            const long double lo = std::sqrt((w.zeta - w.eta).to_long_double());
            const long double norm = std::sqrt(w.chat_norm_sq.to_long_double());
            const long double mn = static_cast<long double>(w.M) * w.N;
            const double gamma_dev =
                std::abs(static_cast<double>((hi + lo) / (2.0L * norm)) - w.gamma);
            const double eps_dev = std::abs(
                static_cast<double>((hi - lo) / (4.0L * norm * (mn - 1.0L) + 1.0L)) -
                w.epsilon);
            report.checks.push_back(
                {path + ":gamma", gamma_dev <= 1e-12, gamma_dev, 1e-12, ""});
            report.checks.push_back(
                {path + ":epsilon", eps_dev <= 1e-12, eps_dev, 1e-12, ""});
        } else if (type == "wmem_params") {
            const WmemParams p = wmem_params_from_json(doc);
            const double rederived = wmem_beta(p.inner_radius, p.outer_radius,
                                               static_cast<double>(p.m), p.epsilon);
            const double dev = std::abs(rederived / p.beta - 1.0);
            report.checks.push_back({path + ":beta", dev <= 1e-15, dev, 1e-15, ""});
            const double mn = std::sqrt(static_cast<double>(p.m) + 1.0);
            const double radii_dev =
                std::abs(p.inner_radius * p.outer_radius - 2.0 / mn);
            report.checks.push_back(
                {path + ":radii_product", radii_dev <= 1e-12, radii_dev, 1e-12, ""});
        } else {
            throw ParseError(path + ": unknown instance type '" + type + "'");
        }
    }
    report.wall_time_s = seconds_since(t0);
    return report;
}

}  // namespace qsep
