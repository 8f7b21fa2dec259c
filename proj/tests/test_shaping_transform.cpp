#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicm/error.hpp"
#include "bicm/hadamard.hpp"
#include "bicm/shaping_transform.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace bicm;

namespace {

Matrix column(std::initializer_list<double> v)
{
    Matrix x(static_cast<Eigen::Index>(v.size()), 1);
    Eigen::Index r = 0;
    for (double d : v) {
        x(r++, 0) = d;
    }
    return x;
}

Matrix square4(std::initializer_list<double> v)
{
    Matrix a(4, 4);
    auto it = v.begin();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            a(i, j) = *it++;
        }
    }
    return a;
}

const BitProbabilities kB1({0.35, 0.50});

} // namespace

TEST_CASE("gamma of the two-bit example")
{
    const Matrix g = gamma(kB1).g;
    const Matrix expected = square4({1.977, 0.304, 0, 0, -0.304, 1.977, 0, 0, 0, 0, 1.977, 0.304, 0, 0, -0.304, 1.977});
    CHECK(oracle::max_abs(g - expected) < 1e-3);
    CHECK(oracle::max_abs(g - oracle::gamma({0.35, 0.50})) < 1e-15);
    const Matrix means = g.colwise().mean();
    CHECK(std::abs(means(0, 0) - 0.418) < 1e-3);
    CHECK(std::abs(means(0, 1) - 0.570) < 1e-3);
    CHECK(std::abs(means(0, 2) - 0.418) < 1e-3);
    CHECK(std::abs(means(0, 3) - 0.570) < 1e-3);
}

TEST_CASE("gamma special cases")
{
    CHECK(oracle::max_abs(gamma(BitProbabilities::uniform(2)).g - 2.0 * Matrix::Identity(4, 4)) < 1e-15);
    const Matrix g1 = gamma(BitProbabilities({0.35})).g;
    const double a = std::sqrt(0.35);
    const double c = std::sqrt(0.65);
    // Row 0: j=0 -> a + c, j=1 -> -a + c. Row 1: j=0 -> a - c, j=1 -> a + c.
    CHECK(g1(0, 0) == doctest::Approx(a + c));
    CHECK(g1(0, 1) == doctest::Approx(c - a));
    CHECK(g1(1, 0) == doctest::Approx(a - c));
    CHECK(g1(1, 1) == doctest::Approx(a + c));
    CHECK(g1(0, 0) == doctest::Approx(1.3978).epsilon(1e-4));
    CHECK(std::abs(g1(0, 1)) == doctest::Approx(0.2146).epsilon(1e-3));
}

TEST_CASE("forward and inverse on the 4-PAM example")
{
    const Matrix x = column({-3, -1, 3, 1});
    const Matrix xr = forward(x, kB1);
    CHECK(oracle::max_abs(xr - column({-2.654, -0.746, 2.654, 0.746})) < 1e-3);
    CHECK(oracle::max_abs(inverse(xr, kB1) - x) < 1e-12);
    // From the rounded published values.
    CHECK(oracle::max_abs(inverse(column({-2.654, -0.746, 2.654, 0.746}), kB1) - x) < 2e-3);
    CHECK(oracle::max_abs(forward(x, BitProbabilities::uniform(2)) - x) < 1e-14);
    CHECK(oracle::max_abs(inverse(x, BitProbabilities::uniform(2)) - x) < 1e-14);
}

TEST_CASE("16-QAM transform is the per-axis 4-PAM transform")
{
    const double pam4[] = {-3, -1, 3, 1};
    Matrix x(16, 2);
    for (int i = 0; i < 16; ++i) {
        x(i, 0) = pam4[i & 3];
        x(i, 1) = pam4[i >> 2];
    }
    const Matrix xr = forward(x, BitProbabilities({0.35, 0.5, 0.35, 0.5}));
    const Matrix axis = forward(column({-3, -1, 3, 1}), kB1);
    for (int i = 0; i < 16; ++i) {
        CHECK(xr(i, 0) == doctest::Approx(axis(i & 3, 0)).epsilon(1e-12));
        CHECK(xr(i, 1) == doctest::Approx(axis(i >> 2, 0)).epsilon(1e-12));
    }
}

TEST_CASE("psi")
{
    const Vector p = psi(kB1);
    CHECK(p[0] == 1.0);
    CHECK(std::abs(p[1] - 0.954) < 1e-3);
    CHECK(p[2] == doctest::Approx(1.0));
    CHECK(std::abs(p[3] - 0.954) < 1e-3);
    CHECK((psi(BitProbabilities::uniform(3)).array() - 1.0).abs().maxCoeff() < 1e-15);
    const Vector q = psi(BitProbabilities({0.9}));
    CHECK(q[0] == 1.0);
    CHECK(q[1] == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("T matrices of the two-bit example")
{
    const auto t = t_matrix(kB1);
    CHECK(oracle::max_abs(t.t - square4({1, -0.300, 0, 0, 0, 0.954, 0, 0, 0, 0, 1, -0.300, 0, 0, 0, 0.954})) < 1e-3);
    CHECK(oracle::max_abs(t.t_inv - square4({1, 0.315, 0, 0, 0, 1.048, 0, 0, 0, 0, 1, 0.315, 0, 0, 0, 1.048})) <
          1e-3);
    CHECK(oracle::max_abs(t_matrix(BitProbabilities::uniform(3)).t - Matrix::Identity(8, 8)) < 1e-15);
}

TEST_CASE("T matrix properties, randomized")
{
    oracle::Gen gen(29);
    for (int c = 0; c < 1000; ++c) {
        const int m = gen.integer(1, 5);
        const auto b = gen.bits(m);
        const BitProbabilities bp(b);
        const auto t = t_matrix(bp);
        const auto M = t.t.rows();
        REQUIRE(oracle::max_abs(t.t * t.t_inv - Matrix::Identity(M, M)) < 1e-10);
        REQUIRE(oracle::max_abs(Matrix(t.t.triangularView<Eigen::StrictlyLower>())) == 0.0);
        REQUIRE(oracle::max_abs(Matrix(t.t_inv.triangularView<Eigen::StrictlyLower>())) == 0.0);
        Matrix H(M, M);
        for (Eigen::Index i = 0; i < M; ++i) {
            for (Eigen::Index j = 0; j < M; ++j) {
                H(i, j) = oracle::h(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), m);
            }
        }
        const Vector sq = oracle::probs(b).cwiseSqrt();
        const Matrix product = H * oracle::gamma(b) * sq.asDiagonal() * H / static_cast<double>(M);
        REQUIRE(oracle::max_abs(t.t - product) < 1e-10);
        REQUIRE(t.psi.minCoeff() > 0.0);
        REQUIRE(t.psi.maxCoeff() <= 1.0 + 1e-15);
    }
}

TEST_CASE("gamma identities, randomized m <= 5")
{
    oracle::Gen gen(31);
    for (int c = 0; c < 1000; ++c) {
        const int m = gen.integer(1, 5);
        const auto b = gen.bits(m);
        const BitProbabilities bp(b);
        const Matrix g = gamma(bp).g;
        const auto M = g.rows();
        const double Md = static_cast<double>(M);
        const Vector p = oracle::probs(b);
        REQUIRE(oracle::max_abs(g - oracle::gamma(b)) < 1e-12);

        // Orthogonal columns.
        REQUIRE(oracle::max_abs(g.transpose() * g - Md * Matrix::Identity(M, M)) < 1e-10);

        for (Eigen::Index j = 0; j < M; ++j) {
            const auto uj = static_cast<std::uint32_t>(j);
            // Hadamard rows against gamma columns.
            for (Eigen::Index l = 0; l < M; ++l) {
                const auto ul = static_cast<std::uint32_t>(l);
                double lhs = 0.0;
                for (Eigen::Index i = 0; i < M; ++i) {
                    lhs += oracle::h(ul, static_cast<std::uint32_t>(i), m) * g(i, j);
                }
                const double rhs = Md * oracle::h(uj, ul, m) * std::sqrt(p[uj ^ ul]);
                REQUIRE(std::abs(lhs - rhs) < 1e-10);
            }
            // Column sums.
            REQUIRE(std::abs(g.col(j).sum() - Md * std::sqrt(p[j])) < 1e-10);
            // Signed column sums.
            for (int k = 0; k < m; ++k) {
                double lhs = 0.0;
                for (Eigen::Index i = 0; i < M; ++i) {
                    lhs += (oracle::bit(static_cast<std::uint32_t>(i), k) != 0 ? -1.0 : 1.0) * g(i, j);
                }
                const int n = oracle::bit(uj, k);
                const double rhs = Md * (n != 0 ? -1.0 : 1.0) *
                                   std::sqrt(p[j] * oracle::bit_prob(b, k, 1 - n) / oracle::bit_prob(b, k, n));
                REQUIRE(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("transform roundtrip and commutation square, randomized")
{
    oracle::Gen gen(37);
    for (int c = 0; c < 1000; ++c) {
        const int m = gen.integer(1, 5);
        const int n = gen.integer(1, 3);
        const auto b = gen.bits(m);
        const BitProbabilities bp(b);
        const Matrix x = gen.alphabet(m, n);
        const Matrix xr = forward(x, bp);
        REQUIRE(oracle::max_abs(xr - oracle::forward(x, b)) < 1e-10);
        REQUIRE(oracle::max_abs(inverse(xr, bp) - x) < 1e-10);
        REQUIRE(oracle::max_abs(forward(inverse(x, bp), bp) - x) < 1e-10);
        const auto t = t_matrix(bp);
        REQUIRE(oracle::max_abs(oracle::naive_ht(xr) - t.t * oracle::naive_ht(x)) < 1e-10);
        REQUIRE(oracle::max_abs(oracle::naive_ht(x) - t.t_inv * oracle::naive_ht(xr)) < 1e-10);
    }
}

TEST_CASE("sum-product identity, randomized m <= 6")
{
    oracle::Gen gen(41);
    for (int c = 0; c < 1000; ++c) {
        const int m = gen.integer(1, 6);
        std::vector<double> f0(static_cast<std::size_t>(m));
        std::vector<double> f1(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            f0[k] = gen.real(-3.0, 3.0);
            f1[k] = gen.real(-3.0, 3.0);
        }
        double lhs = 0.0;
        double scale = 0.0;
        for (std::uint32_t i = 0; i < (1U << m); ++i) {
            double prod = 1.0;
            for (int k = 0; k < m; ++k) {
                prod *= oracle::bit(i, k) != 0 ? f1[k] : f0[k];
            }
            lhs += prod;
            scale += std::abs(prod);
        }
        double rhs = 1.0;
        for (int k = 0; k < m; ++k) {
            rhs *= f0[k] + f1[k];
        }
        REQUIRE(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, scale));
    }
}

TEST_CASE("dimension checks")
{
    CHECK_THROWS_AS(forward(Matrix::Zero(8, 1), kB1), InputError);
    CHECK_THROWS_AS(inverse(Matrix::Zero(2, 1), kB1), InputError);
}
