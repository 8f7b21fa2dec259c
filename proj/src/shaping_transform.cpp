#include "bicm/shaping_transform.hpp"

#include "bicm/error.hpp"

#include <cmath>
#include <string>

namespace bicm {

namespace {

void check_rows(const Matrix& x, const BitProbabilities& b)
{
    if (x.rows() != (Eigen::Index{1} << b.size())) {
        throw InputError("matrix has " + std::to_string(x.rows()) + " rows but " + std::to_string(b.size()) +
                         " bit probabilities imply " + std::to_string(1L << b.size()));
    }
}

} // namespace

GammaMatrix gamma(const BitProbabilities& b)
{
    const int m = b.size();
    const std::uint32_t M = 1U << m;
    Matrix g(M, M);
    for (std::uint32_t i = 0; i < M; ++i) {
        for (std::uint32_t j = 0; j < M; ++j) {
            double prod = 1.0;
            for (int k = 0; k < m; ++k) {
                const int ni = nbc_bit(i, k);
                const int nj = nbc_bit(j, k);
                const double s0 = ((1 - ni) * nj) != 0 ? -1.0 : 1.0;
                const double s1 = (ni * (1 - nj)) != 0 ? -1.0 : 1.0;
                prod *= s0 * std::sqrt(b.zero(k)) + s1 * std::sqrt(b.one(k));
            }
            g(i, j) = prod;
        }
    }
    return {g, b};
}

Matrix forward(const Matrix& x, const BitProbabilities& b)
{
    check_rows(x, b);
    const Vector sqrt_p = symbol_distribution(b).p.cwiseSqrt();
    return gamma(b).g * (sqrt_p.asDiagonal() * x);
}

Matrix inverse(const Matrix& x_ring, const BitProbabilities& b)
{
    check_rows(x_ring, b);
    const double M = static_cast<double>(x_ring.rows());
    const Vector inv_sqrt_p = symbol_distribution(b).p.cwiseSqrt().cwiseInverse();
    return (inv_sqrt_p.asDiagonal() * (gamma(b).g.transpose() * x_ring)) / M;
}

Vector psi(const BitProbabilities& b)
{
    const int m = b.size();
    const std::uint32_t M = 1U << m;
    Vector out(M);
    for (std::uint32_t i = 0; i < M; ++i) {
        double prod = 1.0;
        for (int k = 0; k < m; ++k) {
            if (nbc_bit(i, k) == 1) {
                prod *= 2.0 * std::sqrt(b.zero(k) * b.one(k));
            }
        }
        out[i] = prod;
    }
    return out;
}

TMatrix t_matrix(const BitProbabilities& b)
{
    const int m = b.size();
    const std::uint32_t M = 1U << m;
    const Vector ps = psi(b);
    Matrix t = Matrix::Zero(M, M);
    Matrix t_inv = Matrix::Zero(M, M);
    for (std::uint32_t i = 0; i < M; ++i) {
        for (std::uint32_t j = i; j < M; ++j) {
            // Entries vanish unless the set bits of i are a subset of those of j.
            if ((i & ~j) != 0) {
                continue;
            }
            double fwd = 1.0;
            double inv = 1.0;
            for (int k = 0; k < m; ++k) {
                const int nj = nbc_bit(j, k);
                if (nj != nbc_bit(i, k)) {
                    fwd *= b.zero(k) - b.prob(k, nj);
                    inv *= b.prob(k, nj) - b.zero(k);
                }
            }
            t(i, j) = ps[i] * fwd;
            t_inv(i, j) = inv / ps[j];
        }
    }
    return {t, t_inv, ps};
}

} // namespace bicm
