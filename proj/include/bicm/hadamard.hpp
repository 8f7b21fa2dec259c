#pragma once

#include "bicm/constellation.hpp"

#include <bit>
#include <cstdint>

namespace bicm {

/// h_{i,j} = (-1)^{popcount(i & j)}.
inline int h_coeff(std::uint32_t i, std::uint32_t j)
{
    return (std::popcount(i & j) & 1) != 0 ? -1 : 1;
}

/// M x M Hadamard matrix with entries h_{i,j} (natural order, unnormalized).
Matrix hadamard_matrix(int m);

/// Forward transform x~_i = (1/M) sum_j x_j h_{i,j}, applied column-wise.
/// Row count must be a power of two.
Matrix ht(const Matrix& x);

/// Inverse transform x_j = sum_i x~_i h_{i,j}.
Matrix iht(const Matrix& x_tilde);

} // namespace bicm
