#include <doctest.h>

#include <cmath>
#include <random>

#include "qsep/eb.hpp"
#include "qsep/oracles.hpp"
#include "qsep/sampling.hpp"

using namespace qsep;

namespace {

Matrix bell_state() {
    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    return phi * phi.adjoint();
}

}  // namespace

TEST_CASE("Choi states of reference channels") {
    const ChoiOperator id2 = jamiolkowski([](const Matrix& x) { return x; }, 2, 2);
    CHECK((id2.J.mat - bell_state()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(id2.cp);
    CHECK(id2.tp);

    const ChoiOperator dep = jamiolkowski(
        [](const Matrix& x) { return x.trace() * Matrix::Identity(2, 2) / 2.0; }, 2, 2);
    CHECK((dep.J.mat - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(dep.cp);
    CHECK(dep.tp);

    const ChoiOperator dep33 = jamiolkowski(
        [](const Matrix& x) { return x.trace() * Matrix::Identity(3, 3) / 3.0; }, 3, 3);
    CHECK((dep33.J.mat - Matrix::Identity(9, 9) / 9.0).cwiseAbs().maxCoeff() <= 1e-15);

    const ChoiOperator transp =
        jamiolkowski([](const Matrix& x) { return Matrix(x.transpose()); }, 2, 2);
    CHECK_FALSE(transp.cp);
    CHECK(transp.tp);
    CHECK(transp.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("channel validation") {
    CHECK_THROWS_AS(
        jamiolkowski([](const Matrix&) { return Matrix::Identity(3, 3); }, 2, 2),
        ValidationError);
    // Nonlinear action trips the expansion probe.
    CHECK_THROWS_AS(jamiolkowski(
                        [](const Matrix& x) {
                            return Matrix(x * x.cwiseAbs().maxCoeff() +
                                          Matrix::Identity(2, 2));
                        },
                        2, 2),
                    ValidationError);
}

TEST_CASE("CP and TP flags on random Kraus channels") {
    std::mt19937_64 rng(21);
    for (int s = 0; s < 200; ++s) {
        const KrausSet k = random_tp_kraus(rng, 2 + s % 2, 2 + s % 3, 3);
        const ChoiOperator choi = choi_from_kraus(k);
        CHECK(choi.cp);
        CHECK(choi.tp);
    }

    KrausSet lossy = random_tp_kraus(rng, 2, 2, 2);
    lossy.operators.pop_back();  // deliberately sub-normalized
    const ChoiOperator choi = choi_from_kraus(lossy);
    CHECK(choi.cp);
    CHECK_FALSE(choi.tp);
}

TEST_CASE("Kraus extraction inverts the Choi map") {
    const ChoiOperator id2 = jamiolkowski([](const Matrix& x) { return x; }, 2, 2);
    const KrausSet k = kraus_from_choi(id2);
    REQUIRE(k.operators.size() == 1);
    // One Kraus operator, unitary action equal to the identity map.
    Matrix probe(2, 2);
    probe << 0.3, std::complex<double>(0.1, -0.4), std::complex<double>(0.1, 0.4), 0.7;
    CHECK((k.apply(probe) - probe).cwiseAbs().maxCoeff() <= 1e-12);

    const ChoiOperator dep = jamiolkowski(
        [](const Matrix& x) { return x.trace() * Matrix::Identity(2, 2) / 2.0; }, 2, 2);
    CHECK(kraus_from_choi(dep).operators.size() == 4);

    const ChoiOperator transp =
        jamiolkowski([](const Matrix& x) { return Matrix(x.transpose()); }, 2, 2);
    CHECK_THROWS_AS(kraus_from_choi(transp), ValidationError);

    std::mt19937_64 rng(4);
    for (auto [M, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const KrausSet original = random_tp_kraus(rng, M, N, 3);
        const KrausSet rebuilt = kraus_from_choi(choi_from_kraus(original));
        CHECK(rebuilt.completeness_deviation() <= 1e-9);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                const Matrix unit = matrix_unit(N, a, b);
                CHECK((original.apply(unit) - rebuilt.apply(unit)).cwiseAbs().maxCoeff() <=
                      1e-10);
            }
    }
}

TEST_CASE("marker map") {
    const HermitianOperator mixed(Matrix::Identity(4, 4) / 4.0);
    const HermitianOperator marked = marker_map_phi(mixed, 2, 2);
    CHECK(marked.dim() == 8);
    CHECK(std::abs(marked.mat.trace().real() - 1.0) <= 1e-12);
    const Matrix marginal = partial_trace_a(marked.mat, 4, 2);
    CHECK((marginal - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <= 1e-12);

    // N = 2 mixes half and half.
    std::mt19937_64 rng(17);
    const HermitianOperator rho(random_density_matrix(rng, 4));
    const HermitianOperator out = marker_map_phi(rho, 2, 2);
    CHECK((out.mat.topLeftCorner(4, 4) - 0.5 * rho.mat).cwiseAbs().maxCoeff() <= 1e-12);

    for (int N = 2; N <= 5; ++N) {
        const double bound = (2.0 * N - 1.0) / (N - 1.0);
        for (int s = 0; s < 50; ++s) {
            const HermitianOperator in(random_density_matrix(rng, 2 * N));
            const HermitianOperator ph = marker_map_phi(in, 2, N);
            const Matrix rb = partial_trace_a(ph.mat, 4, N);
            const ConditionNumber kappa =
                condition_number(HermitianOperator((rb + Matrix(rb.adjoint())) / 2.0));
            CHECK_FALSE(kappa.singular);
            CHECK(kappa.kappa <= bound + 1e-9);
            CHECK(kappa.kappa <= 3.0 + 1e-9);
        }
    }

    CHECK_THROWS_AS(marker_map_phi(HermitianOperator(Matrix::Identity(4, 4)), 2, 2),
                    ValidationError);
}

TEST_CASE("condition number") {
    CHECK(condition_number(HermitianOperator(Matrix::Identity(3, 3) / 3.0)).kappa ==
          doctest::Approx(1.0).epsilon(1e-12));
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.75;
    diag(1, 1) = 0.25;
    CHECK(condition_number(HermitianOperator(diag)).kappa ==
          doctest::Approx(3.0).epsilon(1e-12));

    Matrix singular = Matrix::Zero(2, 2);
    singular(0, 0) = 1.0;
    const ConditionNumber res = condition_number(HermitianOperator(singular));
    CHECK(res.singular);
    CHECK(std::isinf(res.kappa));
}

TEST_CASE("local filter") {
    // A state whose B marginal is already maximally mixed is a fixed point.
    const HermitianOperator mixed8(Matrix::Identity(8, 8) / 8.0);
    const HermitianOperator fixed = filter_map_upsilon(mixed8, 4, 2);
    CHECK((fixed.mat - mixed8.mat).cwiseAbs().maxCoeff() <= 1e-12);

    const HermitianOperator mixed4(Matrix::Identity(4, 4) / 4.0);
    const HermitianOperator through =
        filter_map_upsilon(marker_map_phi(mixed4, 2, 2), 4, 2);
    CHECK((partial_trace_a(through.mat, 4, 2) - Matrix::Identity(2, 2) / 2.0)
              .cwiseAbs()
              .maxCoeff() <= 1e-12);

    // Entanglement survives the filter.
    const HermitianOperator filtered_bell =
        filter_map_upsilon(marker_map_phi(HermitianOperator(bell_state()), 2, 2), 4, 2);
    CHECK_FALSE(ppt_test(filtered_bell, 4, 2).passes);

    // Rank-deficient B marginal is refused.
    Matrix pure = Matrix::Zero(4, 4);
    pure(0, 0) = 1.0;
    CHECK_THROWS_AS(filter_map_upsilon(HermitianOperator(pure), 2, 2), ValidationError);
}

TEST_CASE("composed reduction preserves the partial-transpose verdict") {
    std::mt19937_64 rng(31);
    for (int s = 0; s < 60; ++s) {
        const Matrix in = (s % 2) ? random_product_mixture(rng, 2, 2, 4)
                                  : random_density_matrix(rng, 4);
        const HermitianOperator rho(in);
        const HermitianOperator out = ebp_reduce(rho, 2, 2);
        CHECK(std::abs(out.mat.trace().real() - 1.0) <= 1e-12);
        CHECK((partial_trace_a(out.mat, 4, 2) - Matrix::Identity(2, 2) / 2.0)
                  .cwiseAbs()
                  .maxCoeff() <= 1e-10);
        CHECK(ppt_test(rho, 2, 2).passes == ppt_test(out, 4, 2).passes);
    }

    const HermitianOperator mixed(Matrix::Identity(4, 4) / 4.0);
    CHECK(ppt_test(ebp_reduce(mixed, 2, 2), 4, 2).passes);
    CHECK_FALSE(ppt_test(ebp_reduce(HermitianOperator(bell_state()), 2, 2), 4, 2).passes);
}

TEST_CASE("fano coordinates") {
    const HermitianOperator mixed(Matrix::Identity(4, 4) / 4.0);
    const FanoVector v = fano_encode(mixed, 2, 2);
    CHECK(v.rA.size() == 3);
    CHECK(v.T.rows() == 3);
    CHECK(v.T.cols() == 3);  // 3 + 9 = (M^2-1) N^2 = 12 reals
    CHECK(v.rA.cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(v.T.cwiseAbs().maxCoeff() <= 1e-15);

    std::mt19937_64 rng(5);
    for (int s = 0; s < 100; ++s) {
        const int M = 2 + s % 2, N = 2 + s % 2;
        const ChoiOperator choi = choi_from_kraus(random_tp_kraus(rng, M, N, 3));
        const FanoVector f = fano_encode(choi.J, M, N);
        const HermitianOperator back = fano_decode(f);
        CHECK((back.mat - choi.J.mat).cwiseAbs().maxCoeff() <= 1e-12);
    }

    // States with a non-mixed B marginal are refused.
    Matrix pure = Matrix::Zero(4, 4);
    pure(0, 0) = 1.0;
    CHECK_THROWS_AS(fano_encode(HermitianOperator(pure), 2, 2), ValidationError);
}
