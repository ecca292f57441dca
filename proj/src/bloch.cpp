#include "qsep/bloch.hpp"

#include <cmath>

namespace qsep {

HermitianOperator::HermitianOperator(Matrix m) : mat(std::move(m)) {
    if (mat.rows() != mat.cols()) throw ValidationError("Hermitian operator must be square");
    if (!is_hermitian(mat, 1e-12))
        throw ValidationError("matrix is not Hermitian within 1e-12");
}

int GeneratorBasis::u_index(int p, int q) const {
    if (p < 0 || q <= p || q >= dim) throw ValidationError("generator pair index out of range");
    return p * dim - p * (p + 1) / 2 + (q - p - 1);
}

GeneratorBasis su_generators(int d) {
    if (d < 2 || d > 64)
        throw ValidationError("generator basis supported for 2 <= d <= 64");
    GeneratorBasis basis;
    basis.dim = d;
    basis.sigma.reserve(static_cast<std::size_t>(d) * d - 1);
    const std::complex<double> i_unit(0.0, 1.0);
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
            Matrix u = Matrix::Zero(d, d);
            u(p, q) = 1.0;
            u(q, p) = 1.0;
            basis.sigma.push_back(std::move(u));
        }
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
            Matrix v = Matrix::Zero(d, d);
            v(p, q) = -i_unit;
            v(q, p) = i_unit;
            basis.sigma.push_back(std::move(v));
        }
    for (int r = 1; r < d; ++r) {
        Matrix w = Matrix::Zero(d, d);
        const double scale = std::sqrt(2.0 / (static_cast<double>(r) * (r + 1)));
        for (int k = 0; k < r; ++k) w(k, k) = scale;
        w(r, r) = -scale * r;
        basis.sigma.push_back(std::move(w));
    }
    return basis;
}

BlochVector::BlochVector(int d, RealVector c) : dim(d), coords(std::move(c)) {
    if (coords.size() != static_cast<Eigen::Index>(d) * d - 1)
        throw ValidationError("Bloch vector length must be d^2 - 1");
}

SepSetGeometry sep_set_geometry(int M, int N) {
    if (M < 2 || N < 2) throw ValidationError("subsystem dimensions must be >= 2");
    SepSetGeometry g;
    g.M = M;
    g.N = N;
    const double mn = static_cast<double>(M) * N;
    g.inner_radius = std::sqrt(2.0 / (mn * (mn - 1.0)));
    g.outer_radius = std::sqrt(2.0 * (mn - 1.0) / mn);
    g.m = static_cast<long>(M) * M * N * N - 1;
    g.center = BlochVector(M * N, RealVector::Zero(g.m));
    return g;
}

BlochVector density_to_bloch(const HermitianOperator& rho, const GeneratorBasis& basis) {
    if (rho.dim() != basis.dim) throw ValidationError("density/basis dimension mismatch");
    const std::complex<double> tr = rho.mat.trace();
    if (std::abs(tr - 1.0) > 1e-10)
        throw ValidationError("density_to_bloch requires unit trace");
    RealVector coords(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        const std::complex<double> c =
            (rho.mat.transpose().cwiseProduct(basis.sigma[i])).sum();  // Tr(rho sigma_i)
        if (std::abs(c.imag()) > 1e-9)
            throw NumericError("Bloch coefficient has imaginary residue above 1e-9");
        coords(i) = c.real();
    }
    return BlochVector(basis.dim, std::move(coords));
}

HermitianOperator bloch_to_density(const BlochVector& v, const GeneratorBasis& basis) {
    if (v.dim != basis.dim) throw ValidationError("Bloch/basis dimension mismatch");
    Matrix m = Matrix::Identity(basis.dim, basis.dim) / static_cast<double>(basis.dim);
    for (int i = 0; i < basis.size(); ++i) m += 0.5 * v.coords(i) * basis.sigma[i];
    return HermitianOperator(std::move(m));
}

std::pair<double, double> bloch_distance_pair(const HermitianOperator& rho1,
                                              const HermitianOperator& rho2,
                                              const GeneratorBasis& basis) {
    if (rho1.dim() != rho2.dim()) throw ValidationError("dimension mismatch");
    const double frob = (rho1.mat - rho2.mat).norm();
    const BlochVector a = density_to_bloch(rho1, basis);
    const BlochVector b = density_to_bloch(rho2, basis);
    const double bloch = (a.coords - b.coords).norm();
    return {frob, bloch};
}

}  // namespace qsep
