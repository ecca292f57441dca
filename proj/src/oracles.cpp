#include "qsep/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qsep {

namespace {

constexpr double kPsdTol = 1e-9;

RealVector random_simplex_point(std::mt19937_64& rng, int n) {
    std::exponential_distribution<double> exp1(1.0);
    RealVector x(n);
    for (int i = 0; i < n; ++i) x(i) = exp1(rng);
    return x / x.sum();
}

RealVector random_unit_vector(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealVector x(n);
    for (int i = 0; i < n; ++i) x(i) = gauss(rng);
    return x / x.norm();
}

Vector random_unit_cvector(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector x(n);
    for (int i = 0; i < n; ++i) x(i) = std::complex<double>(gauss(rng), gauss(rng));
    return x / x.norm();
}

double edge_form(const RealMatrix& adj, const RealVector& x) {
    return 0.5 * x.dot(adj * x);
}

}  // namespace

SimplexOptResult motzkin_straus_max(const Graph& g, const OptimOptions& opts) {
    const int n = g.n();
    if (n > 20) throw ValidationError("motzkin_straus_max refused for n > 20");

    RealMatrix adj = RealMatrix::Zero(n, n);
    for (auto [u, v] : g.edges()) adj(u, v) = adj(v, u) = 1.0;

    SimplexOptResult best;
    best.x = RealVector::Zero(n);
    best.x(0) = 1.0;
    best.converged = true;
    if (g.edge_count() == 0) return best;  // empty sum

    std::mt19937_64 rng(opts.seed);
    auto run_from = [&](RealVector x) {
        double value = edge_form(adj, x);
        bool converged = false;
        for (int it = 0; it < opts.max_iters; ++it) {
            RealVector ax = adj * x;
            const double quad = x.dot(ax);
            if (quad <= 1e-300) { converged = true; break; }
            x = x.cwiseProduct(ax) / quad;  // replicator step, monotone for 0/1 forms
            const double next = edge_form(adj, x);
            if (next - value < opts.improve_tol) { value = next; converged = true; break; }
            value = next;
        }
        // The flag reports the restart that produced the returned value.
        if (value > best.value) {
            best.value = value;
            best.x = x;
            best.converged = converged;
        }
    };

    for (int r = 0; r < opts.restarts; ++r) run_from(random_simplex_point(rng, n));
    best.restarts_used = opts.restarts;

    // Uniform weight on one maximum clique is a certified global optimum.
    const MaxCliqueResult mc = max_clique_bruteforce(g);
    RealVector seed = RealVector::Zero(n);
    for (int v : mc.witness) seed(v) = 1.0 / mc.omega;
    const double certified = edge_form(adj, seed);
    if (certified >= best.value) {
        best.value = certified;
        best.x = seed;
        best.converged = true;
    }
    return best;
}

namespace {

double g_objective(const std::vector<RealMatrix>& B, const RealVector& x) {
    double v = 0.0;
    for (const auto& b : B) {
        const double q = x.dot(b * x);
        v += q * q;
    }
    return v;
}

RealVector g_gradient(const std::vector<RealMatrix>& B, const RealVector& x) {
    RealVector grad = RealVector::Zero(x.size());
    for (const auto& b : B) grad += 4.0 * x.dot(b * x) * (b * x);
    return grad;
}

void sphere_ascent(const std::vector<RealMatrix>& B, RealVector x, const OptimOptions& opts,
                   SphereOptResult& best) {
    double value = g_objective(B, x);
    double step = 0.2;
    bool converged = false;
    for (int it = 0; it < opts.max_iters; ++it) {
        const RealVector grad = g_gradient(B, x);
        const RealVector tangent = grad - grad.dot(x) * x;
        if (tangent.norm() < 1e-13) { converged = true; break; }
        bool accepted = false;
        while (step >= 1e-14) {
            RealVector cand = (x + step * grad).normalized();
            const double cv = g_objective(B, cand);
            if (cv > value) {
                if (cv - value < opts.improve_tol) {
                    x = cand;
                    value = cv;
                    converged = true;
                }
                else {
                    x = std::move(cand);
                    value = cv;
                    step *= 1.3;
                }
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted || converged) { converged = true; break; }
    }
    if (value > best.value) {
        best.value = value;
        best.x = x;
        best.converged = converged;
    }
}

}  // namespace

SphereOptResult eval_g(const std::vector<RealMatrix>& B, const OptimOptions& opts) {
    if (B.empty()) {
        SphereOptResult r;
        r.converged = true;
        r.x = RealVector::Zero(1);
        r.x(0) = 1.0;
        return r;
    }
    const int l = static_cast<int>(B.front().rows());
    if (l > 30) throw ValidationError("eval_g refused for l > 30");
    for (const auto& b : B)
        if (b.rows() != l || b.cols() != l) throw ValidationError("eval_g: ragged matrix list");

    SphereOptResult best;
    best.x = RealVector::Zero(l);
    best.x(0) = 1.0;
    best.converged = true;

    bool all_zero = true;
    for (const auto& b : B)
        if (b.cwiseAbs().maxCoeff() != 0.0) { all_zero = false; break; }
    if (all_zero) return best;

    std::mt19937_64 rng(opts.seed);
    for (int r = 0; r < opts.restarts; ++r)
        sphere_ascent(B, random_unit_vector(rng, l), opts, best);
    best.restarts_used = opts.restarts;
    return best;
}

SphereOptResult eval_g(const RsdfInstance& inst, const OptimOptions& opts) {
    SphereOptResult best = eval_g(inst.B, opts);
    if (inst.source_graph) {
        const MaxCliqueResult mc = max_clique_bruteforce(*inst.source_graph);
        RealVector seed = RealVector::Zero(inst.l);
        for (int v : mc.witness) seed(v) = 1.0 / std::sqrt(static_cast<double>(mc.omega));
        const double certified = g_objective(inst.B, seed);
        if (certified >= best.value) {
            best.value = certified;
            best.x = seed;
            best.converged = true;
        }
        sphere_ascent(inst.B, seed, opts, best);  // polish from the certificate
    }
    return best;
}

namespace {

// M x M operator a -> <a (x) b| C |a (x) b> for fixed b, and its N x N mirror.
Matrix effective_a(const Matrix& C, const Vector& b, int M, int N) {
    Matrix out = Matrix::Zero(M, M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
            out(i, j) = (b.adjoint() * C.block(i * N, j * N, N, N) * b).value();
    return out;
}

Matrix effective_b(const Matrix& C, const Vector& a, int M, int N) {
    Matrix out = Matrix::Zero(N, N);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
            out += std::conj(a(i)) * a(j) * C.block(i * N, j * N, N, N);
    return out;
}

Vector top_eigenvector(const Matrix& herm, double& value) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    const Eigen::Index last = herm.rows() - 1;  // ascending order
    value = es.eigenvalues()(last);
    return es.eigenvectors().col(last);
}

}  // namespace

ProductStateResult seesaw_product_max(const HermitianOperator& C, int M, int N,
                                      const OptimOptions& opts,
                                      const std::vector<Vector>& b_seeds) {
    if (C.dim() != M * N) throw ValidationError("seesaw: C dimension must equal M*N");
    if (M * N > 256) throw ValidationError("seesaw refused for MN > 256");

    ProductStateResult best;
    best.value = -std::numeric_limits<double>::infinity();
    best.converged = true;

    auto run_from = [&](Vector b) {
        double value = -std::numeric_limits<double>::infinity();
        Vector a;
        bool converged = false;
        for (int it = 0; it < opts.max_iters; ++it) {
            double va = 0.0, vb = 0.0;
            a = top_eigenvector(effective_a(C.mat, b, M, N), va);
            if (va < value - 1e-12)
                throw NumericError("seesaw value sequence decreased");
            b = top_eigenvector(effective_b(C.mat, a, M, N), vb);
            if (vb < va - 1e-12)
                throw NumericError("seesaw value sequence decreased");
            if (vb - value < opts.improve_tol) { value = std::max(value, vb); converged = true; break; }
            value = vb;
        }
        if (value > best.value) {
            best.value = value;
            best.a = a;
            best.b = b;
            best.converged = converged;
        }
    };

    std::mt19937_64 rng(opts.seed);
    for (const auto& seed : b_seeds) run_from(seed.normalized());
    for (int r = 0; r < opts.restarts; ++r) run_from(random_unit_cvector(rng, N));
    best.restarts_used = opts.restarts + static_cast<int>(b_seeds.size());
    return best;
}

PptVerdict ppt_test(const HermitianOperator& rho, int M, int N) {
    if (rho.dim() != M * N) throw ValidationError("ppt_test: dimension must equal M*N");
    if (std::abs(rho.mat.trace().real() - 1.0) > 1e-9)
        throw ValidationError("ppt_test expects a unit-trace state");
    if (min_eigenvalue(rho.mat) < -kPsdTol)
        throw ValidationError("ppt_test expects a positive semidefinite state");
    PptVerdict v;
    v.min_pt_eigenvalue = min_eigenvalue(partial_transpose_b(rho.mat, M, N));
    v.passes = v.min_pt_eigenvalue >= -kPsdTol;
    return v;
}

SepMembershipOracle::SepMembershipOracle(int M, int N, double beta)
    : M_(M), N_(N), beta_(beta), basis_(su_generators(M * N)) {
    const bool exact = (M == 2 && N == 2) || (M == 2 && N == 3);
    if (!exact)
        throw ValidationError("membership oracle supported only at (2,2) and (2,3)");
    if (beta <= 0.0) throw ValidationError("beta must be positive");
}

bool SepMembershipOracle::contains(const RealVector& bloch_coords) const {
    if (bloch_coords.size() != basis_.size())
        throw ValidationError("Bloch vector length mismatch");
    const HermitianOperator rho =
        bloch_to_density(BlochVector(M_ * N_, bloch_coords), basis_);
    if (min_eigenvalue(rho.mat) < -kPsdTol) return false;  // not even a state
    return min_eigenvalue(partial_transpose_b(rho.mat, M_, N_)) >= -kPsdTol;
}

bool wmem_ppt_oracle(const BlochVector& y, double beta, int M, int N) {
    SepMembershipOracle oracle(M, N, beta);
    if (y.dim != M * N) throw ValidationError("Bloch vector dimension mismatch");
    return oracle.contains(y.coords);
}

WoptDemoResult wopt_via_membership(const WoptInstance& w, const MembershipOracle& oracle,
                                   const WoptDemoOptions& opts, bool log_queries) {
    if (w.m != oracle.dimension())
        throw ValidationError("instance/oracle dimension mismatch");

    WoptDemoResult res;
    res.log_queries = log_queries;
    const SepSetGeometry geo = sep_set_geometry(w.M, w.N);
    const RealVector& c = w.c;

    auto query = [&](const RealVector& y) {
        const bool ans = oracle.contains(y);
        ++res.queries;
        if (log_queries) {
            std::ostringstream line;
            line << "{\"query\":" << res.queries << ",\"value\":" << c.dot(y)
                 << ",\"inside\":" << (ans ? "true" : "false") << "}";
            res.query_log.push_back(line.str());
        }
        return ans;
    };
    auto budget_left = [&] { return res.queries < opts.query_budget; };

    // Bisect the boundary crossing of the ray t*c; the origin is always inside.
    double t_in = 0.0, t_out = geo.outer_radius;
    if (query(t_out * c)) {
        t_in = t_out;  // c points at a boundary state; nothing can score higher
    } else {
        while (budget_left() && t_out - t_in > 1e-9) {
            const double mid = 0.5 * (t_in + t_out);
            if (query(mid * c))
                t_in = mid;
            else
                t_out = mid;
        }
    }
    RealVector x = t_in * c;
    double best = t_in;

    // Random-direction hill climb; only oracle-approved moves are kept.
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double step = opts.step_init;
    for (int it = 0; it < opts.climb_iters && budget_left(); ++it) {
        if (step < opts.step_min) break;
        RealVector noise(c.size());
        for (Eigen::Index i = 0; i < noise.size(); ++i) noise(i) = gauss(rng);
        const RealVector dir = (c + 0.7 * noise.normalized()).normalized();
        const RealVector cand = x + step * dir;
        if (c.dot(cand) > best && query(cand)) {
            x = cand;
            best = c.dot(cand);
            step = std::min(step * 1.4, opts.step_init);
        } else {
            step *= 0.82;
        }
    }

    res.best_value = best;
    const double margin = std::max(opts.margin_floor, 5.0 * step);
    // No state scores above the outer radius, which caps the heuristic bound.
    res.upper_bound = std::min(best + margin, geo.outer_radius);

    const bool exhausted = !budget_left();
    if (best >= w.gamma + w.epsilon)
        res.answer = WoptAnswer::Yes;
    else if (!exhausted && res.upper_bound <= w.gamma - w.epsilon)
        res.answer = WoptAnswer::No;
    else
        res.answer = WoptAnswer::Inconclusive;
    return res;
}

}  // namespace qsep
