#include "qsep/eb.hpp"

#include <cmath>
#include <random>

namespace qsep {

namespace {

constexpr double kPsdTol = 1e-9;
constexpr double kTpTol = 1e-10;

void check_state(const Matrix& rho, const char* who) {
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw ValidationError(std::string(who) + " expects a unit-trace state");
    if (min_eigenvalue(rho) < -kPsdTol)
        throw ValidationError(std::string(who) + " expects a positive semidefinite state");
}

}  // namespace

Matrix KrausSet::apply(const Matrix& x) const {
    Matrix out = Matrix::Zero(M, M);
    for (const auto& k : operators) out += k * x * k.adjoint();
    return out;
}

double KrausSet::completeness_deviation() const {
    Matrix s = Matrix::Zero(N, N);
    for (const auto& k : operators) s += k.adjoint() * k;
    return (s - Matrix::Identity(N, N)).cwiseAbs().maxCoeff();
}

ChoiOperator jamiolkowski(const ChannelAction& channel, int M, int N) {
    if (M < 1 || N < 1) throw ValidationError("jamiolkowski: dimensions must be positive");
    std::vector<Matrix> unit_images;
    unit_images.reserve(static_cast<std::size_t>(N) * N);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
            Matrix img = channel(matrix_unit(N, k, l));
            if (img.rows() != M || img.cols() != M)
                throw ValidationError("channel output dimension is not M x M");
            unit_images.push_back(std::move(img));
        }

    // Linearity probe: the action on a random operator must match the
    // matrix-unit expansion.
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix probe(N, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) probe(a, b) = std::complex<double>(gauss(rng), gauss(rng));
    Matrix expanded = Matrix::Zero(M, M);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) expanded += probe(k, l) * unit_images[k * N + l];
    if ((channel(probe) - expanded).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + probe.cwiseAbs().maxCoeff()))
        throw ValidationError("channel action is not linear");

    Matrix j = Matrix::Zero(M * N, M * N);
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
            const Matrix& img = unit_images[k * N + l];
            for (int a = 0; a < M; ++a)
                for (int b = 0; b < M; ++b) j(a * N + k, b * N + l) += img(a, b) / double(N);
        }

    if ((j - Matrix(j.adjoint())).cwiseAbs().maxCoeff() > 1e-9)
        throw ValidationError("channel is not Hermiticity-preserving");
    ChoiOperator out{M, N, HermitianOperator((j + Matrix(j.adjoint())) / 2.0)};
    out.min_eigenvalue = min_eigenvalue(out.J.mat);
    out.cp = out.min_eigenvalue >= -kPsdTol;
    out.tp_deviation =
        (partial_trace_a(out.J.mat, M, N) - Matrix::Identity(N, N) / double(N))
            .cwiseAbs()
            .maxCoeff();
    out.tp = out.tp_deviation <= kTpTol;
    return out;
}

ChoiOperator choi_from_kraus(const KrausSet& kraus) {
    if (kraus.operators.empty()) throw ValidationError("empty Kraus set");
    const int M = kraus.M, N = kraus.N;
    return jamiolkowski([&kraus](const Matrix& x) { return kraus.apply(x); }, M, N);
}

KrausSet kraus_from_choi(const ChoiOperator& choi) {
    if (!choi.cp)
        throw ValidationError("Kraus extraction requires a completely positive channel");
    const int M = choi.M, N = choi.N;
    Eigen::SelfAdjointEigenSolver<Matrix> es(choi.J.mat);
    KrausSet out;
    out.M = M;
    out.N = N;
    const double lambda_max = es.eigenvalues().maxCoeff();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lambda = es.eigenvalues()(i);
        if (lambda <= 1e-12 * std::max(1.0, lambda_max)) continue;
        const Vector v = es.eigenvectors().col(i);
        Matrix k(M, N);
        for (int a = 0; a < M; ++a)
            for (int b = 0; b < N; ++b) k(a, b) = v(a * N + b);
        out.operators.push_back(std::sqrt(lambda * N) * k);
    }
    return out;
}

HermitianOperator marker_map_phi(const HermitianOperator& rho, int M, int N) {
    if (rho.dim() != M * N) throw ValidationError("marker_map_phi: dimension mismatch");
    if (N < 2) throw ValidationError("marker_map_phi requires N >= 2");
    check_state(rho.mat, "marker_map_phi");
    const double p = 1.0 - 1.0 / static_cast<double>(N);
    const int d = M * N;
    Matrix out = Matrix::Zero(2 * d, 2 * d);
    out.topLeftCorner(d, d) = (1.0 - p) * rho.mat;
    out.bottomRightCorner(d, d) = p * Matrix::Identity(d, d) / static_cast<double>(d);
    return HermitianOperator(std::move(out));
}

namespace {

Matrix inverse_sqrt_psd(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const double lambda_max = es.eigenvalues().maxCoeff();
    const double floor = 1e-12 * lambda_max;
    Vector scaled(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double lambda = es.eigenvalues()(i);
        if (lambda < floor)
            throw ValidationError("inverse square root: operator is rank deficient");
        scaled(i) = 1.0 / std::sqrt(lambda);
    }
    return es.eigenvectors() * scaled.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

ConditionNumber condition_number(const HermitianOperator& rho_b) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_b.mat, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    ConditionNumber out;
    if (lo <= 1e-14 * std::max(1.0, hi)) {
        out.kappa = std::numeric_limits<double>::infinity();
        out.singular = true;
    } else {
        out.kappa = hi / lo;
    }
    return out;
}

HermitianOperator filter_map_upsilon(const HermitianOperator& sigma, int dimA, int dimB) {
    if (sigma.dim() != dimA * dimB) throw ValidationError("filter_map_upsilon: dimension mismatch");
    const Matrix sigma_b = partial_trace_a(sigma.mat, dimA, dimB);
    const ConditionNumber kappa = condition_number(HermitianOperator(
        (sigma_b + Matrix(sigma_b.adjoint())) / 2.0));
    if (kappa.singular || kappa.kappa > 1e6)
        throw ValidationError("filter refused: B marginal condition number " +
                              (kappa.singular ? std::string("inf")
                                              : std::to_string(kappa.kappa)) +
                              " exceeds guard");
    const Matrix f = kron(Matrix::Identity(dimA, dimA), inverse_sqrt_psd(sigma_b));
    Matrix out = f * sigma.mat * f;
    out /= out.trace().real();
    return HermitianOperator((out + Matrix(out.adjoint())) / 2.0);
}

HermitianOperator ebp_reduce(const HermitianOperator& rho, int M, int N) {
    return filter_map_upsilon(marker_map_phi(rho, M, N), 2 * M, N);
}

FanoVector fano_encode(const HermitianOperator& rho, int M, int N) {
    if (rho.dim() != M * N) throw ValidationError("fano_encode: dimension mismatch");
    const Matrix marginal_b = partial_trace_a(rho.mat, M, N);
    if ((marginal_b - Matrix::Identity(N, N) / double(N)).cwiseAbs().maxCoeff() > kTpTol)
        throw ValidationError("fano_encode requires Tr_A(rho) = I/N");

    const GeneratorBasis basis_a = su_generators(M);
    const GeneratorBasis basis_b = su_generators(N);
    FanoVector out;
    out.M = M;
    out.N = N;
    const Matrix marginal_a = partial_trace_b(rho.mat, M, N);
    out.rA = RealVector(basis_a.size());
    for (int i = 0; i < basis_a.size(); ++i)
        out.rA(i) = (marginal_a.transpose().cwiseProduct(basis_a.sigma[i])).sum().real();
    out.T = RealMatrix(basis_a.size(), basis_b.size());
    for (int i = 0; i < basis_a.size(); ++i)
        for (int j = 0; j < basis_b.size(); ++j) {
            const Matrix op = kron(basis_a.sigma[i], basis_b.sigma[j]);
            out.T(i, j) = (rho.mat.transpose().cwiseProduct(op)).sum().real();
        }
    return out;
}

HermitianOperator fano_decode(const FanoVector& v) {
    const int M = v.M, N = v.N;
    const GeneratorBasis basis_a = su_generators(M);
    const GeneratorBasis basis_b = su_generators(N);
    if (v.rA.size() != basis_a.size() || v.T.rows() != basis_a.size() ||
        v.T.cols() != basis_b.size())
        throw ValidationError("fano_decode: component sizes do not match (M, N)");

    const double mn = static_cast<double>(M) * N;
    Matrix rho = Matrix::Identity(M * N, M * N);
    for (int i = 0; i < basis_a.size(); ++i)
        rho += (M / 2.0) * v.rA(i) * kron(basis_a.sigma[i], Matrix::Identity(N, N));
    for (int i = 0; i < basis_a.size(); ++i)
        for (int j = 0; j < basis_b.size(); ++j)
            rho += (mn / 4.0) * v.T(i, j) * kron(basis_a.sigma[i], basis_b.sigma[j]);
    rho /= mn;
    return HermitianOperator((rho + Matrix(rho.adjoint())) / 2.0);
}

}  // namespace qsep
