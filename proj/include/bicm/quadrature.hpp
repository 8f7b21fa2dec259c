#pragma once

#include <vector>

namespace bicm {

/// Gauss-Hermite rule for weight exp(-t^2) on the real line. The weights sum
/// to sqrt(pi).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline constexpr int kMaxGaussHermiteOrder = 300;

/// Nodes in ascending order: Jacobi-matrix eigenvalues refined by Newton
/// iteration on the orthonormal Hermite recurrence.
GaussHermiteRule gauss_hermite(int order);

} // namespace bicm
