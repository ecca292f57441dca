#pragma once

#include <utility>
#include <vector>

#include "qsep/linalg.hpp"

namespace qsep {

// Hermitian operator with a validated entry-wise Hermiticity invariant
// (|m - m^dagger| <= 1e-12 per entry at construction).
struct HermitianOperator {
    Matrix mat;

    explicit HermitianOperator(Matrix m);
    int dim() const { return static_cast<int>(mat.rows()); }
};

// Traceless Hermitian generators of SU(d) normalized to Tr(s_i s_j) = 2 d_ij,
// ordered as all symmetric pair generators (p<q, lexicographic), then all
// antisymmetric pair generators in the same order, then the d-1 diagonal ones.
struct GeneratorBasis {
    int dim = 0;
    std::vector<Matrix> sigma;  // d^2 - 1 matrices

    int size() const { return static_cast<int>(sigma.size()); }

    // Position of the symmetric generator for basis pair p < q (0-indexed).
    int u_index(int p, int q) const;
    int v_index(int p, int q) const { return u_index(p, q) + dim * (dim - 1) / 2; }
    int w_index(int r) const { return dim * (dim - 1) + (r - 1); }  // r = 1..d-1
};

GeneratorBasis su_generators(int d);  // 2 <= d <= 64

struct BlochVector {
    int dim = 0;             // dimension of the underlying Hilbert space
    RealVector coords;       // length dim^2 - 1

    BlochVector() = default;
    BlochVector(int d, RealVector c);
};

// Geometry of the separable set in Bloch coordinates: origin-centered inner
// ball of radius r, outer ball of radius R, ambient dimension m.
struct SepSetGeometry {
    int M = 0, N = 0;
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    long m = 0;
    BlochVector center;  // all zeros (maximally mixed state)
};

SepSetGeometry sep_set_geometry(int M, int N);

// coords[i] = Tr(rho * sigma_i); requires unit trace and discards imaginary
// residue after checking it stays below 1e-9.
BlochVector density_to_bloch(const HermitianOperator& rho, const GeneratorBasis& basis);

// I/d + (1/2) sum_i v_i sigma_i. Hermitian and unit trace by construction;
// positivity is deliberately NOT checked so points outside the state body can
// be represented (membership tests handle positivity).
HermitianOperator bloch_to_density(const BlochVector& v, const GeneratorBasis& basis);

// (Frobenius distance, Bloch-coordinate distance); the first is always the
// second divided by sqrt(2).
std::pair<double, double> bloch_distance_pair(const HermitianOperator& rho1,
                                              const HermitianOperator& rho2,
                                              const GeneratorBasis& basis);

}  // namespace qsep
