#pragma once

#include "bicm/constellation.hpp"

#include <numbers>

namespace bicm {

inline constexpr double kLog2E = std::numbers::log2e;

/// First-order low-SNR description of a constellation: mean, average symbol
/// energy, and the slope of the BICM-GMI at SNR = 0 in bit per unit SNR.
struct LowGmiParams {
    Vector mu;
    double es = 0.0;
    double alpha = 0.0;

    /// 10 log10(1/alpha): the wideband Eb/N0 limit in dB.
    double alpha_inv_db() const;
};

// All routes below take an NBC-ordered alphabet (row i carries label i).

/// Uniform input distribution, sign-sum form of alpha.
LowGmiParams params_uniform(const Matrix& x);

/// Uniform input distribution via the Hadamard transform:
/// mu = x~_0, Es = sum ||x~_i||^2, alpha = log2(e)/Es sum_k ||x~_{2^k}||^2.
LowGmiParams params_ht(const Matrix& x);

/// Arbitrary product-form distribution, evaluated with the O(M^2 m) double
/// sum over symbol pairs.
LowGmiParams params(const Matrix& x, const BitProbabilities& b);

/// params_uniform(forward(x, b)). This is the route used by the CLI.
LowGmiParams params_via_transform(const Matrix& x, const BitProbabilities& b);

/// alpha from the per-bit squared-norm expression
/// log2(e)/(2 Es) sum_k [ ||sum_i (-1)^{n_ik} P_i x_i / sqrt(P(C_k=n_ik))||^2
///                      + ||sum_i P_i x_i / sqrt(P(C_k=n_ik))||^2 - 2 ||mu||^2 ].
double alpha_proof_form(const Matrix& x, const BitProbabilities& b);

/// Slope of the coded-modulation MI at SNR = 0: log2(e) (1 - ||mu||^2 / Es).
double cm_alpha(const Matrix& x, const BitProbabilities& b);

/// Normalizes the labeling first, then uses params_via_transform.
LowGmiParams params(const Constellation& c);

} // namespace bicm
