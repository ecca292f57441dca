#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsep/bloch.hpp"
#include "qsep/graph.hpp"
#include "qsep/reduction.hpp"

namespace qsep {

// Shared optimizer budgets; every knob is CLI-overridable.
struct OptimOptions {
    int restarts = 50;
    int max_iters = 500;
    double improve_tol = 1e-12;
    std::uint64_t seed = 0;
};

struct SphereOptResult {
    double value = 0.0;
    RealVector x;             // unit argmax
    int restarts_used = 0;
    bool converged = false;
};

struct SimplexOptResult {
    double value = 0.0;
    RealVector x;             // entries >= 0 summing to 1
    int restarts_used = 0;
    bool converged = false;
};

struct ProductStateResult {
    double value = 0.0;
    Vector a;                 // unit vector in C^M
    Vector b;                 // unit vector in C^N
    int restarts_used = 0;
    bool converged = false;
};

struct PptVerdict {
    bool passes = false;
    double min_pt_eigenvalue = 0.0;
};

// Maximum of the edge form sum_{(i,j) in E} x_i x_j over the probability
// simplex, by multistart replicator ascent; when the graph is small enough for
// the exact clique oracle, the uniform-on-max-clique seed certifies the global
// optimum (1/2)(1 - 1/omega).
SimplexOptResult motzkin_straus_max(const Graph& g, const OptimOptions& opts = {});

// Maximum of sum_i (x^T B_i x)^2 over the unit sphere by multistart projected
// gradient ascent. l <= 30.
SphereOptResult eval_g(const std::vector<RealMatrix>& B, const OptimOptions& opts = {});

// As above, but clique-derived provenance adds the certified seed (square-root
// lift of the uniform clique point) whose value 2(1 - 1/omega) is the global
// optimum.
SphereOptResult eval_g(const RsdfInstance& inst, const OptimOptions& opts = {});

// Alternating eigenvector ascent for max <a(x)b|C|a(x)b> over unit a, b; the
// value sequence is non-decreasing within each restart. Extra deterministic
// b-side seeds may be supplied (e.g. the sphere argmax of the source RSDF).
ProductStateResult seesaw_product_max(const HermitianOperator& C, int M, int N,
                                      const OptimOptions& opts = {},
                                      const std::vector<Vector>& b_seeds = {});

// Partial-transpose test on the B factor. Exact separability criterion only at
// (M,N) in {(2,2),(2,3)}; a necessary condition elsewhere.
PptVerdict ppt_test(const HermitianOperator& rho, int M, int N);

// Membership oracle over a convex body in R^dimension. Implementations either
// tolerate concurrent queries or say so via thread_safe(); callers honor it.
class MembershipOracle {
public:
    virtual ~MembershipOracle() = default;
    virtual bool contains(const RealVector& y) const = 0;
    virtual long dimension() const = 0;
    virtual bool thread_safe() const { return false; }
};

// Weak-membership oracle for the separable set in Bloch coordinates, exact in
// the (2,2)/(2,3) regime: YES iff the reconstructed operator is a state that
// passes the partial-transpose test. Points within beta of the border may
// resolve either way, as the contract allows.
class SepMembershipOracle final : public MembershipOracle {
public:
    SepMembershipOracle(int M, int N, double beta);

    bool contains(const RealVector& bloch_coords) const override;
    long dimension() const override { return basis_.size(); }
    bool thread_safe() const override { return true; }
    int M() const { return M_; }
    int N() const { return N_; }
    double beta() const { return beta_; }

private:
    int M_, N_;
    double beta_;
    GeneratorBasis basis_;
};

bool wmem_ppt_oracle(const BlochVector& y, double beta, int M, int N);

enum class WoptAnswer { Yes, No, Inconclusive };

struct WoptDemoOptions {
    long query_budget = 4000;
    int climb_iters = 1500;
    double step_init = 0.25;
    double step_min = 1e-5;
    double margin_floor = 5e-3;  // slack added to the best value for the NO side
    std::uint64_t seed = 0;
};

struct WoptDemoResult {
    WoptAnswer answer = WoptAnswer::Inconclusive;
    double best_value = 0.0;     // certified: every probe was oracle-approved
    double upper_bound = 0.0;    // best_value plus the stall margin (heuristic)
    long queries = 0;
    std::vector<std::string> query_log;  // JSON lines when logging is enabled
    bool log_queries = false;
};

// Demonstration optimize-via-membership loop: line search along the objective
// from the origin plus random-direction hill climbing, every accepted point
// validated by the oracle. YES when the certified value clears gamma+epsilon,
// NO when best value + margin falls under gamma-epsilon; otherwise
// inconclusive. The margin is heuristic telemetry plumbing, not a rigorous
// oracle reduction.
WoptDemoResult wopt_via_membership(const WoptInstance& w, const MembershipOracle& oracle,
                                   const WoptDemoOptions& opts = {},
                                   bool log_queries = false);

}  // namespace qsep
