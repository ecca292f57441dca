#pragma once

#include <functional>
#include <vector>

#include "qsep/bloch.hpp"

namespace qsep {

// Action of a linear map L(C^N) -> L(C^M) on operators.
using ChannelAction = std::function<Matrix(const Matrix&)>;

// State representation of a channel: (Phi (x) id) applied to the maximally
// entangled state. CP iff positive semidefinite; TP iff the first-factor
// partial trace is I/N.
struct ChoiOperator {
    int M = 0, N = 0;
    HermitianOperator J;
    bool cp = false;
    bool tp = false;
    double min_eigenvalue = 0.0;
    double tp_deviation = 0.0;  // max-entry distance of Tr_A(J) from I/N
};

struct KrausSet {
    int M = 0, N = 0;
    std::vector<Matrix> operators;  // each M x N

    Matrix apply(const Matrix& x) const;        // sum_i K x K^dagger
    double completeness_deviation() const;      // max-entry |sum K^dag K - I|
};

struct FanoVector {
    int M = 0, N = 0;
    RealVector rA;   // length M^2 - 1
    RealMatrix T;    // (M^2-1) x (N^2-1) correlation block
};

struct ConditionNumber {
    double kappa = 0.0;
    bool singular = false;
};

// Evaluates the map on all matrix units, checks linearity on a random probe,
// and assembles the Choi state with CP/TP flags.
ChoiOperator jamiolkowski(const ChannelAction& channel, int M, int N);

ChoiOperator choi_from_kraus(const KrausSet& kraus);

// Spectral rebuild of a Kraus family from a CP Choi state; the reconstructed
// action matches the original on all matrix units.
KrausSet kraus_from_choi(const ChoiOperator& choi);

// Marker-ancilla preprocessing: (1-p)|0><0| (x) rho + p|1><1| (x) I/(MN) with
// p = 1 - 1/N. Keeps separability status across the (marker+A)/B split and
// bounds the condition number of the B marginal by (2N-1)/(N-1) <= 3.
HermitianOperator marker_map_phi(const HermitianOperator& rho, int M, int N);

// Local filter: conjugation by I (x) sigma_B^{-1/2} followed by trace
// renormalization; the B marginal of the output is exactly I/N.
HermitianOperator filter_map_upsilon(const HermitianOperator& sigma, int dimA, int dimB);

ConditionNumber condition_number(const HermitianOperator& rho_b);

// The composed map Upsilon(Phi(rho)): a state on C^2 (x) C^M (x) C^N whose
// (2M)/N marginal is maximally mixed, separable across that split iff the
// input was separable across M/N.
HermitianOperator ebp_reduce(const HermitianOperator& rho, int M, int N);

// Coordinates for states with a maximally mixed B marginal: the A-side Bloch
// component plus the correlation matrix, (M^2-1)N^2 reals in total.
FanoVector fano_encode(const HermitianOperator& rho, int M, int N);
HermitianOperator fano_decode(const FanoVector& v);

}  // namespace qsep
