#pragma once

#include <optional>
#include <vector>

#include "qsep/bloch.hpp"
#include "qsep/graph.hpp"
#include "qsep/rational.hpp"

namespace qsep {

// Robust semidefinite feasibility instance: decide whether the sphere maximum
// of sum_i (x^T B_i x)^2 clears zeta+eta (YES) or stays below zeta-eta (NO).
struct RsdfInstance {
    int k = 0;                    // number of matrices
    int l = 0;                    // matrix side
    std::vector<RealMatrix> B;    // k symmetric l x l matrices
    Rational zeta;
    Rational eta;
    Rational sum_norm_sq;         // exact sum_i ||B_i||_F^2

    // Provenance for clique-derived instances; enables certified optima.
    std::optional<Graph> source_graph;
    std::optional<int> source_c;

    void validate() const;  // symmetry, zeta >= eta >= 0, k/l consistency
};

// Weak-optimization instance over the separable set of C^M (x) C^N: decide
// whether max of c . r over separable Bloch vectors clears gamma+epsilon.
struct WoptInstance {
    int M = 0, N = 0;
    long m = 0;                   // M^2 N^2 - 1
    RealVector c_hat;             // unnormalized objective, length m
    RealVector c;                 // c_hat / ||c_hat||
    double gamma = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;           // Frobenius norm of the C gadget

    // Exact operands the doubles above were materialized from.
    Rational zeta, eta;
    Rational chat_norm_sq;        // ||c_hat||^2 = delta^2 / 2
    Rational delta_sq;

    std::optional<HermitianOperator> c_matrix;  // retained for verification
};

// Error parameter for the membership-oracle reduction, with the inputs it was
// computed from.
struct WmemParams {
    double beta = 0.0;
    double epsilon = 0.0;
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    long m = 0;
};

// One matrix per vertex pair (s,t), s<t lexicographic, carrying the adjacency
// entry at positions (s,t),(t,s); thresholds are set so the YES/NO gap matches
// the clique-number identity for the squared edge form. Requires c >= 2 and at
// least one edge (degenerate cases are answered upstream).
RsdfInstance clique_to_rsdf(const CliqueInstance& inst);

// The symmetric (MN)x(MN) block gadget: first block row/column carries the
// B_i embedded in N x N blocks, everything else zero. M defaults to k+1 and
// may be padded higher; N = l(l-1)/2 + 1. Frobenius norm equals
// sqrt(2 sum_i ||B_i||^2).
HermitianOperator build_c_matrix(const RsdfInstance& inst,
                                 std::optional<int> M_target = std::nullopt);

int wopt_N_for(int l);
int wopt_M_for(int k, std::optional<int> M_target = std::nullopt);

// Full RSDF -> WOPT mapping: objective c from the gadget's generator
// expansion (only symmetric pair generators contribute; computed exactly),
// gamma and epsilon from the threshold square roots.
WoptInstance rsdf_to_wopt(const RsdfInstance& inst,
                          std::optional<int> M_target = std::nullopt);

// beta = r^3 eps^3 / (2^13 3^3 m^5 R^4 (R + r)) for the instance's (M, N).
// Requires 0 < epsilon < 1; always returns beta < epsilon.
WmemParams wopt_to_wmem_params(const WoptInstance& w);
double wmem_beta(double inner_radius, double outer_radius, double m, double epsilon);

// Scaling of the end-to-end membership error bound, evaluated symbolically in
// log2 domain (no matrices are built). Worst case per clique size n: complete
// graph, threshold ceil(n/2), M = N = n(n-1)/2 + 1 unless M_pad overrides.
double worst_case_log2_beta(double n, std::optional<double> M_pad = std::nullopt);

// Least-squares slope of log2(beta) against log2(n); approaches -73.
double hardness_exponent_n(const std::vector<double>& n_values);
// Slope in log2(M) at fixed n (padding only); approaches -16.
double hardness_exponent_M(double n_fixed, const std::vector<double>& M_values);
// Slope in log2(N) with M pinned to a constant; approaches -20.5.
double hardness_exponent_N(double M_fixed, const std::vector<double>& n_values);

}  // namespace qsep
