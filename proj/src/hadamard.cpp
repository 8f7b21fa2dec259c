#include "bicm/hadamard.hpp"

#include "bicm/error.hpp"

#include <string>

namespace bicm {

namespace {

void check_rows(const Matrix& x)
{
    if (!is_power_of_two(x.rows())) {
        throw InputError("Hadamard transform needs a power-of-two row count, got " + std::to_string(x.rows()));
    }
}

// In-place butterfly; leaves sum_j x_j h_{i,j} in row i.
void butterfly(Matrix& x)
{
    const Eigen::Index M = x.rows();
    for (Eigen::Index half = 1; half < M; half <<= 1) {
        for (Eigen::Index base = 0; base < M; base += 2 * half) {
            for (Eigen::Index r = base; r < base + half; ++r) {
                const Eigen::RowVectorXd a = x.row(r);
                const Eigen::RowVectorXd b = x.row(r + half);
                x.row(r) = a + b;
                x.row(r + half) = a - b;
            }
        }
    }
}

} // namespace

Matrix hadamard_matrix(int m)
{
    const std::uint32_t M = 1U << m;
    Matrix h(M, M);
    for (std::uint32_t i = 0; i < M; ++i) {
        for (std::uint32_t j = 0; j < M; ++j) {
            h(i, j) = h_coeff(i, j);
        }
    }
    return h;
}

Matrix ht(const Matrix& x)
{
    check_rows(x);
    Matrix out = x;
    butterfly(out);
    out /= static_cast<double>(x.rows());
    return out;
}

Matrix iht(const Matrix& x_tilde)
{
    check_rows(x_tilde);
    Matrix out = x_tilde;
    butterfly(out);
    return out;
}

} // namespace bicm
