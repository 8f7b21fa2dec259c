#include "bicm/low_gmi.hpp"

#include "bicm/error.hpp"
#include "bicm/hadamard.hpp"
#include "bicm/shaping_transform.hpp"

#include <cmath>
#include <string>

namespace bicm {

namespace {

void check_shape(const Matrix& x, const BitProbabilities& b)
{
    if (!is_power_of_two(x.rows()) || x.rows() < 2) {
        throw InputError("alphabet needs 2^m rows");
    }
    if (x.rows() != (Eigen::Index{1} << b.size())) {
        throw InputError("alphabet has " + std::to_string(x.rows()) + " rows, bit probabilities imply " +
                         std::to_string(1L << b.size()));
    }
}

double checked_energy(double es)
{
    if (!(es > 0.0)) {
        throw UndefinedAlphaError("average symbol energy is zero; alpha is undefined");
    }
    return es;
}

} // namespace

double LowGmiParams::alpha_inv_db() const { return 10.0 * std::log10(1.0 / alpha); }

LowGmiParams params_uniform(const Matrix& x)
{
    const int m = log2_exact(x.rows());
    const double M = static_cast<double>(x.rows());
    LowGmiParams out;
    out.mu = x.colwise().mean().transpose();
    out.es = checked_energy(x.rowwise().squaredNorm().mean());
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        Vector s = Vector::Zero(x.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            const double sign = nbc_bit(static_cast<std::uint32_t>(i), k) != 0 ? -1.0 : 1.0;
            s += sign * x.row(i).transpose();
        }
        acc += s.squaredNorm();
    }
    out.alpha = kLog2E * acc / (M * M * out.es);
    return out;
}

LowGmiParams params_ht(const Matrix& x)
{
    const int m = log2_exact(x.rows());
    const Matrix xt = ht(x);
    LowGmiParams out;
    out.mu = xt.row(0).transpose();
    out.es = checked_energy(xt.squaredNorm());
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        acc += xt.row(Eigen::Index{1} << k).squaredNorm();
    }
    out.alpha = kLog2E * acc / out.es;
    return out;
}

LowGmiParams params(const Matrix& x, const BitProbabilities& b)
{
    check_shape(x, b);
    const int m = b.size();
    const Vector p = symbol_distribution(b).p;
    const Eigen::Index M = x.rows();

    LowGmiParams out;
    out.mu = (x.transpose() * p);
    out.es = checked_energy(p.dot(x.rowwise().squaredNorm()));

    const Matrix gram = x * x.transpose();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < M; ++i) {
        const auto ui = static_cast<std::uint32_t>(i);
        for (Eigen::Index j = 0; j < M; ++j) {
            const auto uj = static_cast<std::uint32_t>(j);
            double bit_sum = 0.0;
            for (int k = 0; k < m; ++k) {
                const int ni = nbc_bit(ui, k);
                const int nj = nbc_bit(uj, k);
                const double sign = ((ni + nj) & 1) != 0 ? -1.0 : 1.0;
                bit_sum += sign * b.prob(k, 1 - ni) / b.prob(k, nj);
            }
            acc += p[i] * p[j] * gram(i, j) * bit_sum;
        }
    }
    out.alpha = kLog2E * acc / out.es;
    return out;
}

LowGmiParams params_via_transform(const Matrix& x, const BitProbabilities& b)
{
    check_shape(x, b);
    return params_uniform(forward(x, b));
}

double alpha_proof_form(const Matrix& x, const BitProbabilities& b)
{
    check_shape(x, b);
    const int m = b.size();
    const Vector p = symbol_distribution(b).p;
    const Vector mu = x.transpose() * p;
    const double es = checked_energy(p.dot(x.rowwise().squaredNorm()));

    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        Vector signed_sum = Vector::Zero(x.cols());
        Vector plain_sum = Vector::Zero(x.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            const int n = nbc_bit(static_cast<std::uint32_t>(i), k);
            const Vector term = p[i] * x.row(i).transpose() / std::sqrt(b.prob(k, n));
            signed_sum += n != 0 ? Vector(-term) : term;
            plain_sum += term;
        }
        acc += signed_sum.squaredNorm() + plain_sum.squaredNorm() - 2.0 * mu.squaredNorm();
    }
    return kLog2E * acc / (2.0 * es);
}

double cm_alpha(const Matrix& x, const BitProbabilities& b)
{
    check_shape(x, b);
    const Vector p = symbol_distribution(b).p;
    const Vector mu = x.transpose() * p;
    const double es = checked_energy(p.dot(x.rowwise().squaredNorm()));
    return kLog2E * (1.0 - mu.squaredNorm() / es);
}

LowGmiParams params(const Constellation& c)
{
    const auto normalized = normalize_to_nbc(c);
    return params_via_transform(normalized.points(), normalized.bits());
}

} // namespace bicm
