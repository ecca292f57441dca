#include "qsep/reduction.hpp"

#include <cmath>

namespace qsep {

void RsdfInstance::validate() const {
    if (k < 1 || l < 1 || static_cast<int>(B.size()) != k)
        throw ValidationError("rsdf: matrix count does not match k");
    for (const auto& b : B) {
        if (b.rows() != l || b.cols() != l)
            throw ValidationError("rsdf: matrix side does not match l");
        if ((b - b.transpose()).cwiseAbs().maxCoeff() > 0.0)
            throw ValidationError("rsdf: matrices must be symmetric");
    }
    if (eta < Rational(0)) throw ValidationError("rsdf: eta must be non-negative");
    if (zeta < eta) throw ValidationError("rsdf: zeta - eta must be non-negative");
}

RsdfInstance clique_to_rsdf(const CliqueInstance& inst) {
    const Graph& g = inst.graph;
    const int n = g.n();
    if (inst.c < 2)
        throw ValidationError("clique_to_rsdf requires c >= 2 (c = 1 is answered directly)");
    if (g.edge_count() == 0)
        throw ValidationError("clique_to_rsdf requires at least one edge");

    RsdfInstance out;
    out.k = n * (n - 1) / 2;
    out.l = n;
    out.B.reserve(out.k);
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            RealMatrix b = RealMatrix::Zero(n, n);
            if (g.has_edge(s, t)) {
                b(s, t) = 1.0;
                b(t, s) = 1.0;
            }
            out.B.push_back(std::move(b));
        }
    // zeta + eta = 2(1 - 1/c) and zeta - eta = 2(1 - 1/(c-1)): exactly the
    // squared-form values at clique numbers c and c-1, so the RSDF promise gap
    // separates YES from NO instances with nothing in between.
    const std::int64_t c = inst.c;
    out.zeta = Rational(2) - Rational(1, c) - Rational(1, c - 1);
    out.eta = Rational(1, c * (c - 1));
    out.sum_norm_sq = Rational(2 * static_cast<std::int64_t>(g.edge_count()));
    out.source_graph = g;
    out.source_c = inst.c;
    out.validate();
    return out;
}

int wopt_N_for(int l) { return l * (l - 1) / 2 + 1; }

int wopt_M_for(int k, std::optional<int> M_target) {
    const int base = k + 1;
    if (!M_target) return base;
    if (*M_target < base)
        throw ValidationError("M_target must be at least k + 1");
    return *M_target;
}

HermitianOperator build_c_matrix(const RsdfInstance& inst, std::optional<int> M_target) {
    inst.validate();
    const int M = wopt_M_for(inst.k, M_target);
    const int N = wopt_N_for(inst.l);
    const int d = M * N;
    Matrix c = Matrix::Zero(d, d);
    for (int i = 1; i <= inst.k; ++i) {
        const RealMatrix& b = inst.B[i - 1];
        c.block(0, i * N, inst.l, inst.l) = b.cast<std::complex<double>>();
        c.block(i * N, 0, inst.l, inst.l) = b.cast<std::complex<double>>();
    }
    return HermitianOperator(std::move(c));
}

namespace {

double sqrt_rational(const Rational& r) {
    return std::sqrt(r.to_double());
}

}  // namespace

WoptInstance rsdf_to_wopt(const RsdfInstance& inst, std::optional<int> M_target) {
    inst.validate();
    if (inst.sum_norm_sq == Rational(0))
        throw ValidationError("rsdf_to_wopt: all matrices are zero (gadget would vanish)");

    WoptInstance w;
    w.M = wopt_M_for(inst.k, M_target);
    w.N = wopt_N_for(inst.l);
    w.m = static_cast<long>(w.M) * w.M * w.N * w.N - 1;
    w.zeta = inst.zeta;
    w.eta = inst.eta;
    w.delta_sq = Rational(2) * inst.sum_norm_sq;
    w.chat_norm_sq = inst.sum_norm_sq;  // expansion halves the squared norm
    w.delta = std::sqrt(w.delta_sq.to_double());

    HermitianOperator c_mat = build_c_matrix(inst, M_target);
    const int d = w.M * w.N;

    // The gadget is real symmetric with zero diagonal, so its generator
    // expansion has coefficient C[p][q] on the symmetric pair generator (p,q)
    // and exact zero on every antisymmetric and diagonal generator.
    GeneratorBasis index_only;  // index arithmetic only; no matrices built
    index_only.dim = d;
    w.c_hat = RealVector::Zero(w.m);
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
            const double entry = c_mat.mat(p, q).real();
            if (entry != 0.0) w.c_hat(index_only.u_index(p, q)) = entry;
        }

    const double chat_norm = std::sqrt(w.chat_norm_sq.to_double());
    w.c = w.c_hat / chat_norm;

    const double sqrt_hi = sqrt_rational(w.zeta + w.eta);
    const double sqrt_lo = sqrt_rational(w.zeta - w.eta);
    w.gamma = (sqrt_hi + sqrt_lo) / (2.0 * chat_norm);
    const double mn = static_cast<double>(w.M) * w.N;
    w.epsilon = (sqrt_hi - sqrt_lo) / (4.0 * chat_norm * (mn - 1.0) + 1.0);

    // The bound above must dominate the looser one from the NO side, which
    // reduces to ||c_hat||^2 (4MN - 6)^2 >= 1; exact in rationals.
    const Rational factor(4 * static_cast<std::int64_t>(w.M) * w.N - 6);
    if (!(w.chat_norm_sq * factor * factor >= Rational(1)))
        throw NumericError("epsilon case bounds out of order; instance too degenerate");

    w.c_matrix = std::move(c_mat);
    return w;
}

double wmem_beta(double inner_radius, double outer_radius, double m, double epsilon) {
    const double r3 = inner_radius * inner_radius * inner_radius;
    const double e3 = epsilon * epsilon * epsilon;
    const double m5 = m * m * m * m * m;
    const double R4 = outer_radius * outer_radius * outer_radius * outer_radius;
    return r3 * e3 / (8192.0 * 27.0 * m5 * R4 * (outer_radius + inner_radius));
}

WmemParams wopt_to_wmem_params(const WoptInstance& w) {
    if (!(w.epsilon > 0.0 && w.epsilon < 1.0))
        throw ValidationError("wopt_to_wmem_params requires 0 < epsilon < 1");
    const SepSetGeometry geo = sep_set_geometry(w.M, w.N);
    WmemParams p;
    p.epsilon = w.epsilon;
    p.inner_radius = geo.inner_radius;
    p.outer_radius = geo.outer_radius;
    p.m = geo.m;
    p.beta = wmem_beta(geo.inner_radius, geo.outer_radius, static_cast<double>(geo.m),
                       w.epsilon);
    if (!(p.beta > 0.0 && p.beta < w.epsilon))
        throw NumericError("beta fell outside (0, epsilon)");
    return p;
}

namespace {

const double kLog2_3 = std::log2(3.0);

// All pieces of the beta formula in log2 domain so clique sizes up to ~1e6
// evaluate without flushing to zero.
struct Log2Pieces {
    double log2_eps;
    double log2_r;
    double log2_R;
    double log2_m;
    double log2_R_plus_r;
};

Log2Pieces pieces_for(double n, std::optional<double> M_pad) {
    if (n < 10.0) throw ValidationError("exponent evaluation expects n >= 10");
    const double c = std::ceil(n / 2.0);
    const double hi = 2.0 * (1.0 - 1.0 / c);            // zeta + eta
    const double lo = 2.0 * (1.0 - 1.0 / (c - 1.0));    // zeta - eta
    const double two_eta = 2.0 / (c * (c - 1.0));
    // sqrt(hi) - sqrt(lo) via the difference of squares; immune to cancellation.
    const double log2_gap = std::log2(two_eta) - std::log2(std::sqrt(hi) + std::sqrt(lo));

    const double N = n * (n - 1.0) / 2.0 + 1.0;
    const double M = M_pad ? *M_pad : N;
    if (M < N) throw ValidationError("padded M must be at least N");
    const double log2_MN = std::log2(M) + std::log2(N);
    const double chat_norm = std::sqrt(n * (n - 1.0));  // complete graph: 2 * e_hat

    double log2_denom;  // 4 ||c_hat|| (MN - 1) + 1
    const double estimate = 2.0 + std::log2(chat_norm) + log2_MN;
    if (estimate < 500.0) {
        const double mn = std::exp2(log2_MN);
        log2_denom = std::log2(4.0 * chat_norm * (mn - 1.0) + 1.0);
    } else {
        log2_denom = estimate;
    }

    Log2Pieces p;
    p.log2_eps = log2_gap - log2_denom;
    p.log2_r = 0.5 * (1.0 - 2.0 * log2_MN);  // MN - 1 ~ MN at these scales
    p.log2_R = 0.5 * (1.0 + std::log2(1.0 - std::exp2(-log2_MN)));
    p.log2_m = 2.0 * log2_MN;
    const double r_over_R = std::exp2(p.log2_r - p.log2_R);
    p.log2_R_plus_r = p.log2_R + std::log2(1.0 + r_over_R);
    return p;
}

double slope_of(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n;
    my /= n;
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

void check_samples(const std::vector<double>& values) {
    if (values.size() < 2)
        throw ValidationError("exponent fit needs at least two sample points");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1])
            throw ValidationError("exponent sample points must be increasing");
}

}  // namespace

double worst_case_log2_beta(double n, std::optional<double> M_pad) {
    const Log2Pieces p = pieces_for(n, M_pad);
    return 3.0 * p.log2_r + 3.0 * p.log2_eps -
           (13.0 + 3.0 * kLog2_3 + 5.0 * p.log2_m + 4.0 * p.log2_R + p.log2_R_plus_r);
}

double hardness_exponent_n(const std::vector<double>& n_values) {
    check_samples(n_values);
    std::vector<double> xs, ys;
    for (double n : n_values) {
        xs.push_back(std::log2(n));
        ys.push_back(worst_case_log2_beta(n));
    }
    return slope_of(xs, ys);
}

double hardness_exponent_M(double n_fixed, const std::vector<double>& M_values) {
    check_samples(M_values);
    std::vector<double> xs, ys;
    for (double M : M_values) {
        xs.push_back(std::log2(M));
        ys.push_back(worst_case_log2_beta(n_fixed, M));
    }
    return slope_of(xs, ys);
}

double hardness_exponent_N(double M_fixed, const std::vector<double>& n_values) {
    check_samples(n_values);
    std::vector<double> xs, ys;
    for (double n : n_values) {
        const double N = n * (n - 1.0) / 2.0 + 1.0;
        xs.push_back(std::log2(N));
        ys.push_back(worst_case_log2_beta(n, M_fixed));
    }
    return slope_of(xs, ys);
}

}  // namespace qsep
