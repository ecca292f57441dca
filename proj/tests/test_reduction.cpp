#include <doctest.h>

#include <cmath>

#include "qsep/oracles.hpp"
#include "qsep/reduction.hpp"

using namespace qsep;

namespace {

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

Graph single_edge() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("triangle gadget") {
    const RsdfInstance inst = clique_to_rsdf({triangle(), 3});
    CHECK(inst.k == 3);
    CHECK(inst.l == 3);
    CHECK(inst.zeta == Rational(7, 6));
    CHECK(inst.eta == Rational(1, 6));
    CHECK(inst.zeta + inst.eta == Rational(4, 3));
    CHECK(inst.zeta - inst.eta == Rational(1));
    for (const auto& b : inst.B) {
        int nonzero = 0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (b(r, c) != 0.0) {
                    ++nonzero;
                    CHECK(b(r, c) == 1.0);
                    CHECK(b(c, r) == 1.0);
                }
        CHECK(nonzero == 2);
    }
}

TEST_CASE("single edge gadget has a closed promise gap") {
    const RsdfInstance inst = clique_to_rsdf({single_edge(), 2});
    CHECK(inst.k == 1);
    CHECK(inst.l == 2);
    CHECK(inst.B[0](0, 1) == 1.0);
    CHECK(inst.B[0](1, 0) == 1.0);
    CHECK(inst.zeta == Rational(1, 2));
    CHECK(inst.eta == Rational(1, 2));
    CHECK(inst.zeta + inst.eta == Rational(1));
    CHECK(inst.zeta - inst.eta == Rational(0));
}

TEST_CASE("gadget count: e_hat live matrices, k - e_hat zero matrices") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(3 + seed % 4, 0.5, seed);
        if (g.edge_count() == 0) continue;
        const RsdfInstance inst = clique_to_rsdf({g, 2});
        CHECK(inst.k == g.n() * (g.n() - 1) / 2);
        int live = 0;
        for (const auto& b : inst.B)
            if (b.cwiseAbs().maxCoeff() > 0) ++live;
        CHECK(live == g.edge_count());
    }
}

TEST_CASE("degenerate clique inputs are refused") {
    CHECK_THROWS_AS(clique_to_rsdf({triangle(), 1}), ValidationError);
    CHECK_THROWS_AS(clique_to_rsdf({Graph(3), 2}), ValidationError);
}

TEST_CASE("gadget matrix") {
    const RsdfInstance k3 = clique_to_rsdf({triangle(), 3});
    const HermitianOperator c16 = build_c_matrix(k3);
    CHECK(c16.dim() == 16);  // M = 4, N = 4
    CHECK(c16.mat.norm() == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));

    const RsdfInstance k2 = clique_to_rsdf({single_edge(), 2});
    const HermitianOperator c4 = build_c_matrix(k2);
    CHECK(c4.dim() == 4);
    int ones = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (c4.mat(r, c) != 0.0) {
                CHECK(c4.mat(r, c).real() == 1.0);
                ++ones;
            }
    CHECK(ones == 4);

    const HermitianOperator padded = build_c_matrix(k3, 6);
    CHECK(padded.dim() == 24);
    CHECK(padded.mat.norm() == doctest::Approx(c16.mat.norm()).epsilon(1e-15));
    CHECK_THROWS_AS(build_c_matrix(k3, 3), ValidationError);
}

TEST_CASE("triangle wopt instance values") {
    const WoptInstance w = rsdf_to_wopt(clique_to_rsdf({triangle(), 3}));
    CHECK(w.M == 4);
    CHECK(w.N == 4);
    CHECK(w.m == 255);
    CHECK(w.c_hat.size() == 255);
    CHECK(w.chat_norm_sq == Rational(6));
    CHECK(w.c_hat.norm() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK(w.c.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const double hi = std::sqrt(4.0 / 3.0);
    CHECK(w.gamma == doctest::Approx((hi + 1.0) / (2.0 * std::sqrt(6.0))).epsilon(1e-15));
    CHECK(w.epsilon ==
          doctest::Approx((hi - 1.0) / (60.0 * std::sqrt(6.0) + 1.0)).epsilon(1e-15));
    CHECK(w.delta == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("chat norm equals sqrt(2 e_hat) for random graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = random_graph(2 + seed % 5, 0.6, seed * 31 + 1);
        if (g.edge_count() == 0) continue;
        const WoptInstance w = rsdf_to_wopt(clique_to_rsdf({g, 2}));
        CHECK(w.c_hat.norm() ==
              doctest::Approx(std::sqrt(2.0 * g.edge_count())).epsilon(1e-12));
        CHECK(w.chat_norm_sq == Rational(2 * static_cast<std::int64_t>(g.edge_count())));
    }
}

TEST_CASE("epsilon uses the binding case and dominates the loose one") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = random_graph(2 + seed % 6, 0.5, seed * 77 + 3);
        if (g.edge_count() == 0) continue;
        for (int c = 2; c <= g.n(); ++c) {
            const WoptInstance w = rsdf_to_wopt(clique_to_rsdf({g, c}));
            const double hi = std::sqrt((w.zeta + w.eta).to_double());
            const double lo = std::sqrt((w.zeta - w.eta).to_double());
            const double chat = std::sqrt(w.chat_norm_sq.to_double());
            const double loose = (hi - lo) / (2.0 * chat + 2.0);
            CHECK(w.epsilon < loose);
            CHECK(w.epsilon > 0.0);
        }
    }
}

TEST_CASE("zero gadget is refused") {
    RsdfInstance zero;
    zero.k = 1;
    zero.l = 2;
    zero.B = {RealMatrix::Zero(2, 2)};
    zero.zeta = Rational(1, 2);
    zero.eta = Rational(1, 4);
    zero.sum_norm_sq = Rational(0);
    CHECK_THROWS_AS(rsdf_to_wopt(zero), ValidationError);
}

TEST_CASE("beta formula golden evaluation") {
    // Spot regression; the full 10-tuple table lives in the acceptance suite.
    const SepSetGeometry geo = sep_set_geometry(2, 2);
    const double beta = wmem_beta(geo.inner_radius, geo.outer_radius, 15.0, 0.5);
    CHECK(std::abs(beta / 1.378180973993350156e-14 - 1.0) <= 1e-15);
}

TEST_CASE("beta scales exactly cubically in epsilon") {
    const SepSetGeometry geo = sep_set_geometry(2, 3);
    for (double eps : {0.75, 0.5, 0.2, 0.01}) {
        const double b1 = wmem_beta(geo.inner_radius, geo.outer_radius, 35.0, eps);
        const double b2 = wmem_beta(geo.inner_radius, geo.outer_radius, 35.0, eps / 2.0);
        CHECK(b2 * 8.0 == b1);  // bit-exact: /2 and /8 are exact scalings
    }
}

TEST_CASE("beta stays below epsilon across the pipeline") {
    for (int n = 2; n <= 6; ++n) {
        const Graph g = complete(n);
        for (int c = 2; c <= n; ++c) {
            const WoptInstance w = rsdf_to_wopt(clique_to_rsdf({g, c}));
            if (!(w.epsilon > 0.0 && w.epsilon < 1.0)) continue;
            const WmemParams p = wopt_to_wmem_params(w);
            CHECK(p.beta > 0.0);
            CHECK(p.beta < w.epsilon);
        }
    }
}

TEST_CASE("wmem params validate epsilon range") {
    WoptInstance w = rsdf_to_wopt(clique_to_rsdf({triangle(), 3}));
    w.epsilon = 1.5;
    CHECK_THROWS_AS(wopt_to_wmem_params(w), ValidationError);
    w.epsilon = 0.0;
    CHECK_THROWS_AS(wopt_to_wmem_params(w), ValidationError);
}

TEST_CASE("worst-case beta shrinks monotonically") {
    double prev = worst_case_log2_beta(10);
    for (int n = 11; n <= 40; ++n) {
        const double cur = worst_case_log2_beta(n);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("pipeline epsilon and beta shrink with n at desk scale") {
    double prev_eps = 1.0, prev_beta = 1.0;
    for (int n = 4; n <= 6; ++n) {
        const WoptInstance w =
            rsdf_to_wopt(clique_to_rsdf({complete(n), (n + 1) / 2}));
        const WmemParams p = wopt_to_wmem_params(w);
        CHECK(w.epsilon < prev_eps);
        CHECK(p.beta < prev_beta);
        prev_eps = w.epsilon;
        prev_beta = p.beta;
    }
}

TEST_CASE("hardness exponent fits") {
    const double drop = worst_case_log2_beta(1e4) - worst_case_log2_beta(2e4);
    CHECK(std::abs(drop - 73.0) <= 1.0);

    const double slope_n = hardness_exponent_n({1e4, 2e4});
    CHECK(std::abs(slope_n + 73.0) <= 1.0);

    const double slope_m = hardness_exponent_M(140, {1e4, 2e4});
    CHECK(std::abs(slope_m + 16.0) <= 0.5);

    const double slope_big_n = hardness_exponent_N(1e9, {1e4, 2e4});
    CHECK(std::abs(slope_big_n + 20.5) <= 0.5);
}

TEST_CASE("exponent fit input validation") {
    CHECK_THROWS_AS(hardness_exponent_n({1e4}), ValidationError);
    CHECK_THROWS_AS(hardness_exponent_n({2e4, 1e4}), ValidationError);
    CHECK_THROWS_AS(worst_case_log2_beta(5), ValidationError);
    CHECK_THROWS_AS(worst_case_log2_beta(1e4, 10.0), ValidationError);  // M < N
}
