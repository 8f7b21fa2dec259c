#pragma once

#include "bicm/constellation.hpp"

namespace bicm {

/// Probability-dependent transform coefficients gamma_{i,j} for a given set
/// of bit probabilities. Columns are orthogonal with squared norm M.
struct GammaMatrix {
    Matrix g;
    BitProbabilities bits;
};

/// Maps the Hadamard transform of an alphabet onto the Hadamard transform of
/// its shaping transform: ht(forward(X, b)) = t * ht(X). Both t and t_inv are
/// upper triangular.
struct TMatrix {
    Matrix t;
    Matrix t_inv;
    Vector psi;
};

GammaMatrix gamma(const BitProbabilities& b);

/// x°_i = sum_j x_j gamma_{i,j} sqrt(P_j), i.e. G * D^{1/2} * X with
/// D = diag(P). The result, used with uniform probabilities, has the same
/// low-GMI parameters as [X, P].
Matrix forward(const Matrix& x, const BitProbabilities& b);

/// x_j = 1/(M sqrt(P_j)) sum_i x°_i gamma_{i,j}.
Matrix inverse(const Matrix& x_ring, const BitProbabilities& b);

/// psi_i = prod over set bits k of i of 2 sqrt(P(C_k=0) P(C_k=1)); psi_0 = 1.
Vector psi(const BitProbabilities& b);

/// T and T^{-1} from their closed-form entries.
TMatrix t_matrix(const BitProbabilities& b);

} // namespace bicm
