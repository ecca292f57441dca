#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qsep/errors.hpp"

namespace qsep {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Bipartite tensor index convention used everywhere in this library: the
// composite basis state |i>|k> on C^dA (x) C^dB sits at row i*dB + k, matching
// kron(A, B).

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Vector kron_vec(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

inline Matrix partial_trace_a(const Matrix& rho, int dA, int dB) {
    if (rho.rows() != dA * dB || rho.cols() != dA * dB)
        throw ValidationError("partial_trace_a: dimension mismatch");
    Matrix out = Matrix::Zero(dB, dB);
    for (int i = 0; i < dA; ++i)
        out += rho.block(i * dB, i * dB, dB, dB);
    return out;
}

inline Matrix partial_trace_b(const Matrix& rho, int dA, int dB) {
    if (rho.rows() != dA * dB || rho.cols() != dA * dB)
        throw ValidationError("partial_trace_b: dimension mismatch");
    Matrix out = Matrix::Zero(dA, dA);
    for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dA; ++j)
            out(i, j) = rho.block(i * dB, j * dB, dB, dB).trace();
    return out;
}

// Transpose on the second factor: out[(i,k),(j,l)] = rho[(i,l),(j,k)].
inline Matrix partial_transpose_b(const Matrix& rho, int dA, int dB) {
    if (rho.rows() != dA * dB || rho.cols() != dA * dB)
        throw ValidationError("partial_transpose_b: dimension mismatch");
    Matrix out(dA * dB, dA * dB);
    for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dA; ++j)
            out.block(i * dB, j * dB, dB, dB) =
                rho.block(i * dB, j * dB, dB, dB).transpose();
    return out;
}

inline bool is_hermitian(const Matrix& m, double tol = 1e-12) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline double min_eigenvalue(const Matrix& herm) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

inline Matrix matrix_unit(int d, int k, int l) {
    Matrix e = Matrix::Zero(d, d);
    e(k, l) = 1.0;
    return e;
}

}  // namespace qsep
