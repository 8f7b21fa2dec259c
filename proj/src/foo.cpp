#include "bicm/foo.hpp"

#include "bicm/error.hpp"
#include "bicm/hadamard.hpp"
#include "bicm/low_gmi.hpp"

#include <cmath>
#include <string>

namespace bicm {

namespace {

bool is_pow2_index(Eigen::Index j) { return j > 0 && (j & (j - 1)) == 0; }

// Sum of ||x~_j||^2 over j >= 1 that are not powers of two.
double forbidden_energy(const Matrix& xt)
{
    double acc = 0.0;
    for (Eigen::Index j = 1; j < xt.rows(); ++j) {
        if (!is_pow2_index(j)) {
            acc += xt.row(j).squaredNorm();
        }
    }
    return acc;
}

void check_shape(const Matrix& x, const BitProbabilities& b)
{
    if (x.rows() != (Eigen::Index{1} << b.size())) {
        throw InputError("alphabet has " + std::to_string(x.rows()) + " rows, bit probabilities imply " +
                         std::to_string(1L << b.size()));
    }
}

} // namespace

FooReport is_foo_uniform(const Matrix& x, double tol)
{
    const auto p = params_ht(x);
    const Matrix xt = ht(x);
    FooReport r;
    r.mean_norm = p.mu.norm();
    r.residual = (forbidden_energy(xt) + xt.row(0).squaredNorm()) / p.es;
    r.alpha_gap = kLog2E - p.alpha;
    r.is_foo = std::sqrt(r.residual) <= tol && r.mean_norm <= tol * std::sqrt(p.es);
    return r;
}

FooReport is_foo(const Matrix& x, const BitProbabilities& b, double tol)
{
    check_shape(x, b);
    const auto p = params_via_transform(x, b);
    FooReport r;
    r.mean_norm = p.mu.norm();
    r.residual = forbidden_energy(ht(x)) / p.es;
    r.alpha_gap = kLog2E - p.alpha;
    r.is_foo = std::sqrt(r.residual) <= tol && r.mean_norm <= tol * std::sqrt(p.es);
    return r;
}

bool is_foo_ht_condition(const Matrix& x, const BitProbabilities& b, double tol)
{
    check_shape(x, b);
    const Vector prob = symbol_distribution(b).p;
    const double es = prob.dot(x.rowwise().squaredNorm());
    if (!(es > 0.0)) {
        throw UndefinedAlphaError("average symbol energy is zero");
    }
    const Matrix xt = ht(x);
    Eigen::RowVectorXd offset = xt.row(0);
    for (int k = 0; k < b.size(); ++k) {
        offset -= xt.row(Eigen::Index{1} << k) * (b.one(k) - b.zero(k));
    }
    const double scale = std::sqrt(es);
    return std::sqrt(forbidden_energy(xt) / es) <= tol && offset.norm() <= tol * scale;
}

Matrix translate_to_zero_mean(const Matrix& x, const BitProbabilities& b)
{
    check_shape(x, b);
    const Vector prob = symbol_distribution(b).p;
    const Eigen::RowVectorXd mu = (x.transpose() * prob).transpose();
    return x.rowwise() - mu;
}

Matrix hypercube_projection(const Matrix& v, const BitProbabilities& b)
{
    const int m = b.size();
    if (v.rows() != m) {
        throw InputError("hypercube_projection needs one generator row per bit");
    }
    const Eigen::Index M = Eigen::Index{1} << m;
    Matrix x = Matrix::Zero(M, v.cols());
    for (Eigen::Index i = 0; i < M; ++i) {
        for (int k = 0; k < m; ++k) {
            const double sign = nbc_bit(static_cast<std::uint32_t>(i), k) != 0 ? 1.0 : -1.0;
            x.row(i) += sign * v.row(k);
        }
    }
    return translate_to_zero_mean(x, b);
}

Vector ampm_mean(const BitProbabilities& b)
{
    if (b.size() != 3) {
        throw InputError("8-AMPM mean needs exactly 3 bit probabilities");
    }
    Vector mu(2);
    mu << 1.0 + 2.0 * (b.zero(1) - b.zero(0) - b.zero(2)), 2.0 * (b.zero(0) - b.zero(2));
    return mu;
}

} // namespace bicm
