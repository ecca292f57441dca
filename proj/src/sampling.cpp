#include "qsep/sampling.hpp"

namespace qsep {

namespace {

Matrix ginibre(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
    return g;
}

}  // namespace

Vector random_pure_state(std::mt19937_64& rng, int d) {
    Vector v = ginibre(rng, d, 1);
    return v / v.norm();
}

Matrix random_density_matrix(std::mt19937_64& rng, int d, int rank) {
    if (rank <= 0 || rank > d) rank = d;
    const Matrix g = ginibre(rng, d, rank);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return (rho + Matrix(rho.adjoint())) / 2.0;
}

Matrix random_product_mixture(std::mt19937_64& rng, int M, int N, int terms) {
    std::exponential_distribution<double> exp1(1.0);
    RealVector w(terms);
    for (int t = 0; t < terms; ++t) w(t) = exp1(rng);
    w /= w.sum();
    Matrix rho = Matrix::Zero(M * N, M * N);
    for (int t = 0; t < terms; ++t) {
        const Vector ab = kron_vec(random_pure_state(rng, M), random_pure_state(rng, N));
        rho += w(t) * (ab * ab.adjoint());
    }
    return (rho + Matrix(rho.adjoint())) / 2.0;
}

KrausSet random_tp_kraus(std::mt19937_64& rng, int M, int N, int count) {
    // QR of a tall Ginibre block gives an isometry C^N -> C^M (x) C^count;
    // slicing out the environment index yields a trace-preserving family.
    const Matrix g = ginibre(rng, M * count, N);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(M * count, N);
    KrausSet out;
    out.M = M;
    out.N = N;
    for (int e = 0; e < count; ++e) {
        Matrix k(M, N);
        for (int a = 0; a < M; ++a) k.row(a) = q.row(a * count + e);
        out.operators.push_back(std::move(k));
    }
    return out;
}

}  // namespace qsep
