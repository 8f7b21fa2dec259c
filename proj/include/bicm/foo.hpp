#pragma once

#include "bicm/constellation.hpp"

namespace bicm {

inline constexpr double kDefaultFooTol = 1e-9;

/// Verdict of a first-order-optimality test together with the continuous
/// quantities it was derived from, so near-FOO constellations can be ranked.
struct FooReport {
    bool is_foo = false;
    /// ||mu|| in signal units.
    double mean_norm = 0.0;
    /// Energy of the forbidden Hadamard coefficients divided by Es.
    double residual = 0.0;
    /// log2(e) - alpha.
    double alpha_gap = 0.0;
};

// Tolerances are relative to sqrt(Es): a constellation is FOO when
// sqrt(residual) <= tol and ||mu|| <= tol * sqrt(Es).

/// Uniform input distribution: every x~_j outside {1, 2, 4, ..., M/2} must
/// vanish (j = 0 included, so the residual already contains the mean).
FooReport is_foo_uniform(const Matrix& x, double tol = kDefaultFooTol);

/// Arbitrary bit probabilities: zero mean under P and x~_j = 0 for every j
/// outside {0} and the powers of two.
FooReport is_foo(const Matrix& x, const BitProbabilities& b, double tol = kDefaultFooTol);

/// The equivalent test phrased purely in Hadamard coefficients:
/// x~_0 = sum_k x~_{2^k} (P(C_k=1) - P(C_k=0)) plus the same support
/// condition. Kept as a cross-check of is_foo.
bool is_foo_ht_condition(const Matrix& x, const BitProbabilities& b, double tol = kDefaultFooTol);

/// Subtracts the mean under the distribution induced by b.
Matrix translate_to_zero_mean(const Matrix& x, const BitProbabilities& b);

/// x_i = sum_k (2 n_{i,k} - 1) v_k for the m rows v_k of V, translated to zero
/// mean under b. The result is FOO for b.
Matrix hypercube_projection(const Matrix& v, const BitProbabilities& b);

/// Closed-form mean of the 8-AMPM alphabet for m = 3 bit probabilities.
Vector ampm_mean(const BitProbabilities& b);

} // namespace bicm
