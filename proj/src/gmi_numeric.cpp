#include "bicm/gmi_numeric.hpp"

#include "bicm/error.hpp"
#include "bicm/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <thread>

namespace bicm {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Constellation data reused by every noise realisation.
struct Mixture {
    Matrix x;
    Vector p;
    Vector log_p;
    Matrix dist2;
    // log P(C_k = u) at index 2k + u.
    std::vector<double> log_bit;
    int m = 0;
    double es = 0.0;

    explicit Mixture(const Constellation& c)
    {
        const auto n = normalize_to_nbc(c);
        x = n.points();
        p = symbol_distribution(n.bits()).p;
        log_p = p.array().log().matrix();
        m = n.m();
        es = p.dot(x.rowwise().squaredNorm());
        if (!(es > 0.0)) {
            throw NumericError("average symbol energy is zero; SNR is undefined");
        }
        const Eigen::Index M = x.rows();
        dist2.resize(M, M);
        for (Eigen::Index i = 0; i < M; ++i) {
            for (Eigen::Index j = 0; j < M; ++j) {
                dist2(i, j) = (x.row(i) - x.row(j)).squaredNorm();
            }
        }
        log_bit.resize(static_cast<std::size_t>(2 * m));
        for (int k = 0; k < m; ++k) {
            log_bit[static_cast<std::size_t>(2 * k)] = std::log(n.bits().zero(k));
            log_bit[static_cast<std::size_t>(2 * k + 1)] = std::log(n.bits().one(k));
        }
    }
};

struct Integrand {
    double cm = 0.0;
    double bicm = 0.0;
};

// Log-likelihood ratios for y = x_i + z, in nats. `proj` holds x_j . z for
// all j and `a` is scratch of size M.
Integrand evaluate(const Mixture& s, Eigen::Index i, const Vector& proj, double n0, Vector& a)
{
    const Eigen::Index M = s.x.rows();
    const double inv_n0 = 1.0 / n0;
    double amax = -std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < M; ++j) {
        a[j] = s.log_p[j] - (s.dist2(i, j) + 2.0 * (proj[i] - proj[j])) * inv_n0;
        amax = std::max(amax, a[j]);
    }
    double sum = 0.0;
    for (Eigen::Index j = 0; j < M; ++j) {
        sum += std::exp(a[j] - amax);
    }
    const double lse_all = amax + std::log(sum);

    const auto ui = static_cast<std::uint32_t>(i);
    double bicm = 0.0;
    for (int k = 0; k < s.m; ++k) {
        const int u = nbc_bit(ui, k);
        double kmax = -std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < M; ++j) {
            if (nbc_bit(static_cast<std::uint32_t>(j), k) == u) {
                kmax = std::max(kmax, a[j]);
            }
        }
        double ksum = 0.0;
        for (Eigen::Index j = 0; j < M; ++j) {
            if (nbc_bit(static_cast<std::uint32_t>(j), k) == u) {
                ksum += std::exp(a[j] - kmax);
            }
        }
        bicm += kmax + std::log(ksum) - s.log_bit[static_cast<std::size_t>(2 * k + u)];
    }
    bicm -= s.m * lse_all;
    return {-lse_all, bicm};
}

void check_inputs(double snr, const QuadratureSpec& quad)
{
    if (!(snr > 0.0) || !std::isfinite(snr)) {
        throw InputError("SNR must be positive and finite");
    }
    if (quad.order < kMinQuadratureOrder) {
        throw InputError("quadrature order must be at least " + std::to_string(kMinQuadratureOrder));
    }
}

double ebno_db(double snr, double rate)
{
    if (!(rate > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(snr / rate);
}

GmiPoint evaluate_point(const Mixture& s, double snr, const GaussHermiteRule& rule)
{
    const double n0 = s.es / snr;
    const double scale = std::sqrt(n0);
    const int N = static_cast<int>(s.x.cols());
    const auto order = static_cast<Eigen::Index>(rule.nodes.size());
    const double norm = std::pow(std::numbers::pi, -0.5 * N);

    Eigen::Index total = 1;
    for (int d = 0; d < N; ++d) {
        total *= order;
    }

    const Eigen::Index M = s.x.rows();
    Vector z(N);
    Vector proj(M);
    Vector scratch(M);
    std::vector<double> cm_acc(static_cast<std::size_t>(M), 0.0);
    std::vector<double> bicm_acc(static_cast<std::size_t>(M), 0.0);
    for (Eigen::Index node = 0; node < total; ++node) {
        Eigen::Index rest = node;
        double w = norm;
        for (int d = 0; d < N; ++d) {
            const auto idx = static_cast<std::size_t>(rest % order);
            rest /= order;
            z[d] = scale * rule.nodes[idx];
            w *= rule.weights[idx];
        }
        proj.noalias() = s.x * z;
        for (Eigen::Index i = 0; i < M; ++i) {
            const auto v = evaluate(s, i, proj, n0, scratch);
            cm_acc[static_cast<std::size_t>(i)] += w * v.cm;
            bicm_acc[static_cast<std::size_t>(i)] += w * v.bicm;
        }
    }

    double cm = 0.0;
    double bicm = 0.0;
    for (Eigen::Index i = 0; i < M; ++i) {
        cm += s.p[i] * cm_acc[static_cast<std::size_t>(i)];
        bicm += s.p[i] * bicm_acc[static_cast<std::size_t>(i)];
    }
    cm /= kLn2;
    bicm /= kLn2;
    if (!std::isfinite(cm) || !std::isfinite(bicm)) {
        throw NumericError("quadrature produced a non-finite value at SNR " + std::to_string(snr));
    }
    return {snr, cm, bicm, ebno_db(snr, cm), ebno_db(snr, bicm)};
}

} // namespace

double to_db(double linear) { return 10.0 * std::log10(linear); }

double from_db(double db) { return std::pow(10.0, db / 10.0); }

GmiPoint gmi_point(const Constellation& c, double snr, const QuadratureSpec& quad)
{
    check_inputs(snr, quad);
    const Mixture s(c);
    return evaluate_point(s, snr, gauss_hermite(quad.order));
}

GmiPoint gmi_point(const Constellation& c, const ChannelSpec& channel, const QuadratureSpec& quad)
{
    if (!(channel.n0 > 0.0)) {
        throw InputError("noise spectral density must be positive");
    }
    const Mixture s(c);
    const double snr = s.es / channel.n0;
    check_inputs(snr, quad);
    return evaluate_point(s, snr, gauss_hermite(quad.order));
}

double cm_mi(const Constellation& c, double snr, const QuadratureSpec& quad)
{
    return gmi_point(c, snr, quad).cm_mi;
}

double bicm_gmi(const Constellation& c, double snr, const QuadratureSpec& quad)
{
    return gmi_point(c, snr, quad).bicm_gmi;
}

std::vector<double> snr_grid_db(double from, double to, double step)
{
    if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to) || to < from) {
        throw InputError("SNR grid needs from <= to and a positive step");
    }
    std::vector<double> grid;
    const auto count = static_cast<long>(std::floor((to - from) / step + 0.5));
    grid.reserve(static_cast<std::size_t>(count + 1));
    for (long n = 0; n <= count; ++n) {
        grid.push_back(from + static_cast<double>(n) * step);
    }
    return grid;
}

GmiCurve gmi_sweep(const Constellation& c, std::span<const double> snr_db, const QuadratureSpec& quad,
                   unsigned threads)
{
    for (std::size_t n = 1; n < snr_db.size(); ++n) {
        if (!(snr_db[n] > snr_db[n - 1])) {
            throw InputError("SNR grid must be strictly increasing");
        }
    }
    for (double db : snr_db) {
        check_inputs(from_db(db), quad);
    }
    const Mixture s(c);
    const auto rule = gauss_hermite(quad.order);

    GmiCurve curve;
    curve.points.resize(snr_db.size());
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, snr_db.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t n = next++; n < snr_db.size(); n = next++) {
            try {
                curve.points[n] = evaluate_point(s, from_db(snr_db[n]), rule);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return curve;
}

double alpha_numeric(const Constellation& c, const QuadratureSpec& quad)
{
    constexpr double s1 = 1e-4;
    constexpr double s2 = 2e-4;
    check_inputs(s1, quad);
    const Mixture s(c);
    const auto rule = gauss_hermite(quad.order);
    const double d1 = evaluate_point(s, s1, rule).bicm_gmi / s1;
    const double d2 = evaluate_point(s, s2, rule).bicm_gmi / s2;
    return 2.0 * d1 - d2;
}

McEstimate mc_gmi(const Constellation& c, double snr, std::uint64_t samples, std::uint64_t seed)
{
    if (samples < 10000) {
        throw InputError("Monte-Carlo estimate needs at least 10^4 samples");
    }
    if (!(snr > 0.0) || !std::isfinite(snr)) {
        throw InputError("SNR must be positive and finite");
    }
    const Mixture s(c);
    const double n0 = s.es / snr;
    const Eigen::Index M = s.x.rows();
    const int N = static_cast<int>(s.x.cols());

    std::mt19937_64 rng(seed);
    std::discrete_distribution<Eigen::Index> pick(s.p.data(), s.p.data() + M);
    std::normal_distribution<double> noise(0.0, std::sqrt(n0 / 2.0));

    Vector z(N);
    Vector proj(M);
    Vector scratch(M);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t n = 1; n <= samples; ++n) {
        const Eigen::Index i = pick(rng);
        for (int d = 0; d < N; ++d) {
            z[d] = noise(rng);
        }
        proj.noalias() = s.x * z;
        const double v = evaluate(s, i, proj, n0, scratch).bicm / kLn2;
        const double delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (v - mean);
    }
    const double var = m2 / static_cast<double>(samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(samples))};
}

double awgn_capacity(double snr, int dims)
{
    if (!(snr >= 0.0)) {
        throw InputError("SNR must be non-negative");
    }
    switch (dims) {
    case 1:
        return 0.5 * std::log2(1.0 + 2.0 * snr);
    case 2:
        return std::log2(1.0 + snr);
    default:
        throw InputError("AWGN capacity is defined here for 1 or 2 real dimensions");
    }
}

double entropy_bits(const Vector& p)
{
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            h -= p[i] * std::log2(p[i]);
        }
    }
    return h;
}

} // namespace bicm
