#include "bicm/quadrature.hpp"

#include "bicm/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bicm {

GaussHermiteRule gauss_hermite(int order)
{
    if (order < 1 || order > kMaxGaussHermiteOrder) {
        throw InputError("Gauss-Hermite order must lie in [1, " + std::to_string(kMaxGaussHermiteOrder) + "]");
    }
    const int n = order;

    // Golub-Welsch starting points: eigenvalues of the Jacobi matrix.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        jacobi(k, k + 1) = jacobi(k + 1, k) = std::sqrt(0.5 * (k + 1));
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw NumericError("Gauss-Hermite eigenvalue problem of order " + std::to_string(n) + " failed");
    }

    const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
    GaussHermiteRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton polish on the orthonormal recurrence; the weight follows from
        // the derivative at the root.
        double z = eig.eigenvalues()[i];
        double pp = 0.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 3e-14 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged || !std::isfinite(z)) {
            throw NumericError("Gauss-Hermite root " + std::to_string(i) + " of order " + std::to_string(n) +
                               " did not converge");
        }
        rule.nodes[static_cast<std::size_t>(i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
    }
    // Exact symmetry about the origin.
    for (int i = 0; i < n / 2; ++i) {
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
        const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = rule.weights[hi] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return rule;
}

} // namespace bicm
