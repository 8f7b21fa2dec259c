#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicm/error.hpp"
#include "bicm/gmi_numeric.hpp"
#include "bicm/low_gmi.hpp"
#include "bicm/quadrature.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace bicm;

namespace {

struct Named {
    std::string label;
    Constellation c;
};

std::vector<Named> catalog_examples()
{
    return {
        {"4-PAM NBC", catalog("pam", 4)},
        {"8-PAM NBC", catalog("pam", 8)},
        {"8-PAM BRGC", catalog("pam", 8, CatalogLabeling::Brgc)},
        {"16-QAM BRGC b1", catalog("qam", 16, CatalogLabeling::Brgc, BitProbabilities({0.35, 0.5, 0.35, 0.5}))},
        {"16-QAM BRGC", catalog("qam", 16, CatalogLabeling::Brgc)},
        {"8-PSK", catalog("psk", 8)},
        {"8-PSK b2", catalog("psk", 8, CatalogLabeling::Nbc, BitProbabilities({0.5, 0.7, 0.9}))},
        {"8-PSK b3", catalog("psk", 8, CatalogLabeling::Nbc, BitProbabilities({0.9, 0.7, 0.3}))},
        {"8-AMPM b6", catalog("ampm8", 8, CatalogLabeling::Nbc, BitProbabilities({0.7, 0.9, 0.7}))},
        {"star 8-QAM", catalog("star8qam", 8)},
        {"star 8-QAM b4", catalog("star8qam", 8, CatalogLabeling::Nbc, BitProbabilities({0.5, 0.5, 0.85}))},
    };
}

double bit_entropy_sum(const BitProbabilities& b)
{
    double h = 0.0;
    for (int k = 0; k < b.size(); ++k) {
        h -= b.zero(k) * std::log2(b.zero(k)) + b.one(k) * std::log2(b.one(k));
    }
    return h;
}

} // namespace

TEST_CASE("Gauss-Hermite rule")
{
    for (int n : {8, 20, 40, 64, 150, 200, 300}) {
        const auto r = gauss_hermite(n);
        double w = 0.0;
        double second = 0.0;
        double fourth = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            w += r.weights[i];
            second += r.weights[i] * r.nodes[i] * r.nodes[i];
            fourth += r.weights[i] * std::pow(r.nodes[i], 4);
        }
        const double sp = std::sqrt(std::numbers::pi);
        CHECK(w == doctest::Approx(sp).epsilon(1e-13));
        CHECK(second == doctest::Approx(sp / 2).epsilon(1e-13));
        CHECK(fourth == doctest::Approx(3 * sp / 4).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gauss_hermite(0), InputError);
    CHECK_THROWS_AS(gauss_hermite(kMaxGaussHermiteOrder + 1), InputError);
}

TEST_CASE("argument checks")
{
    const auto c = catalog("pam", 4);
    CHECK_THROWS_AS(cm_mi(c, 0.0), InputError);
    CHECK_THROWS_AS(bicm_gmi(c, -1.0), InputError);
    CHECK_THROWS_AS(cm_mi(c, 1.0, QuadratureSpec{7}), InputError);
    CHECK_THROWS_AS(gmi_point(c, ChannelSpec{ChannelKind::Awgn, 0.0}), InputError);
    CHECK_THROWS_AS(mc_gmi(c, 1.0, 9999, 1), InputError);
    CHECK_THROWS_AS(snr_grid_db(1.0, 0.0, 0.5), InputError);
    CHECK_THROWS_AS(snr_grid_db(0.0, 1.0, 0.0), InputError);
    const std::vector<double> bad = {0.0, 0.0};
    CHECK_THROWS_AS(gmi_sweep(c, bad), InputError);
    CHECK_THROWS_AS(cm_mi(Constellation(Alphabet(Matrix::Zero(2, 1)), BitProbabilities({0.5})), 1.0),
                    NumericError);
}

TEST_CASE("grid")
{
    const auto g = snr_grid_db(-35.0, 25.0, 0.5);
    CHECK(g.size() == 121);
    CHECK(g.front() == -35.0);
    CHECK(g.back() == doctest::Approx(25.0));
}

TEST_CASE("AWGN capacity")
{
    CHECK(awgn_capacity(0.0, 2) == 0.0);
    CHECK(awgn_capacity(1.0, 2) == doctest::Approx(1.0));
    CHECK(awgn_capacity(1.0, 1) == doctest::Approx(0.5 * std::log2(3.0)));
    const double s = 1e-6;
    CHECK(awgn_capacity(s, 2) / s == doctest::Approx(kLog2E).epsilon(1e-5));
    CHECK(10.0 * std::log10(s / awgn_capacity(s, 1)) == doctest::Approx(-1.5917).epsilon(1e-3));
    CHECK_THROWS_AS(awgn_capacity(1.0, 3), InputError);
}

// Order 200 is far past convergence for these alphabets, so any disagreement
// with the trapezoid oracle is an integrand error.
TEST_CASE("one-dimensional alphabets match trapezoidal integration")
{
    struct Case {
        std::vector<double> x;
        std::vector<double> b;
    };
    const std::vector<Case> cases = {
        {{-3, -1, 1, 3}, {0.5, 0.5}},
        {{-3, -1, 3, 1}, {0.35, 0.5}},
        {{-7, -5, -3, -1, 1, 3, 5, 7}, {0.3, 0.6, 0.8}},
    };
    for (const auto& cs : cases) {
        Matrix x(static_cast<Eigen::Index>(cs.x.size()), 1);
        for (std::size_t i = 0; i < cs.x.size(); ++i) {
            x(static_cast<Eigen::Index>(i), 0) = cs.x[i];
        }
        const Constellation c(Alphabet(x), BitProbabilities(cs.b));
        const Vector pv = oracle::probs(cs.b);
        const std::vector<double> p(pv.data(), pv.data() + pv.size());
        const double es = pv.dot(x.col(0).cwiseAbs2());
        for (double db : {-10.0, 0.0, 5.0, 10.0}) {
            const double snr = from_db(db);
            const auto ref = oracle::mi_1d(cs.x, p, static_cast<int>(cs.b.size()), es / snr);
            const auto got = gmi_point(c, snr, QuadratureSpec{200});
            CHECK(got.cm_mi == doctest::Approx(ref.cm).epsilon(1e-8));
            CHECK(got.bicm_gmi == doctest::Approx(ref.bicm).epsilon(1e-8));
        }
    }
}

TEST_CASE("explicit channel matches the SNR form")
{
    const auto c = catalog("psk", 8);
    const auto a = gmi_point(c, ChannelSpec{ChannelKind::Awgn, 0.5});
    const auto b = gmi_point(c, 2.0);
    CHECK(a.snr == doctest::Approx(2.0));
    CHECK(a.bicm_gmi == doctest::Approx(b.bicm_gmi).epsilon(1e-14));
}

TEST_CASE("low-SNR slopes")
{
    for (const auto& [label, c] : catalog_examples()) {
        INFO(label);
        const auto n = normalize_to_nbc(c);
        const double s = 1e-3;
        const auto pt = gmi_point(c, s);
        CHECK(pt.cm_mi / s == doctest::Approx(cm_alpha(n.points(), n.bits())).epsilon(0.01));
        CHECK(pt.bicm_gmi / s == doctest::Approx(params(c).alpha).epsilon(0.01));
    }
}

TEST_CASE("numeric alpha")
{
    CHECK(alpha_numeric(catalog("pam", 4)) == doctest::Approx(kLog2E).epsilon(0.01));
    CHECK(std::abs(alpha_numeric(catalog("psk", 8)) - 0.62) <= 0.01);
    oracle::Gen gen(71);
    for (int t = 0; t < 20; ++t) {
        const int m = gen.integer(1, 4);
        const int n = gen.integer(1, 2);
        const auto b = gen.bits(m, 0.1, 0.9);
        const Matrix x = gen.alphabet(m, n);
        const Constellation c{Alphabet(x), BitProbabilities(b)};
        INFO("case " << t);
        CHECK(alpha_numeric(c) == doctest::Approx(params(c).alpha).epsilon(0.01));
    }
}

TEST_CASE("high-SNR ceilings")
{
    const auto u = catalog("qam", 16, CatalogLabeling::Brgc);
    const auto pu = gmi_point(u, from_db(30.0));
    CHECK(pu.cm_mi == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(pu.bicm_gmi == doctest::Approx(4.0).epsilon(1e-6));

    const BitProbabilities b({0.35, 0.5, 0.35, 0.5});
    const auto s = catalog("qam", 16, CatalogLabeling::Brgc, b);
    const auto ps = gmi_point(s, from_db(35.0));
    CHECK(ps.cm_mi == doctest::Approx(entropy_bits(symbol_distribution(b).p)).epsilon(1e-6));
    CHECK(ps.bicm_gmi == doctest::Approx(bit_entropy_sum(b)).epsilon(1e-6));
}

TEST_CASE("ordering, entropy, capacity and Eb/N0 bounds on the default grid")
{
    const auto grid = snr_grid_db(-35.0, 25.0, 0.5);
    for (const auto& [label, c] : catalog_examples()) {
        INFO(label);
        const auto curve = gmi_sweep(c, grid);
        REQUIRE(curve.points.size() == grid.size());
        const double h = entropy_bits(c.row_probabilities());
        double prev = 0.0;
        for (const auto& p : curve.points) {
            REQUIRE(p.bicm_gmi >= -1e-9);
            REQUIRE(p.bicm_gmi <= p.cm_mi + 1e-6);
            REQUIRE(p.cm_mi <= std::min(h, awgn_capacity(p.snr, c.dim())) + 1e-6);
            REQUIRE(p.snr / p.bicm_gmi >= std::numbers::ln2 - 1e-6);
            REQUIRE(p.ebno_bicm_db >= -1.5917 - 1e-4);
            REQUIRE(p.bicm_gmi >= prev - 1e-9);
            prev = p.bicm_gmi;
        }
    }
}

TEST_CASE("quadrature convergence: order 40 against 64 up to 10 dB")
{
    const auto grid = snr_grid_db(-20.0, 10.0, 2.0);
    for (const auto& [label, c] : catalog_examples()) {
        INFO(label);
        const auto a = gmi_sweep(c, grid, QuadratureSpec{40});
        const auto b = gmi_sweep(c, grid, QuadratureSpec{64});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            INFO("snr_db " << grid[i]);
            CHECK(std::abs(a.points[i].cm_mi - b.points[i].cm_mi) < 1e-6);
            CHECK(std::abs(a.points[i].bicm_gmi - b.points[i].bicm_gmi) < 1e-6);
        }
    }
}

TEST_CASE("labeling permutation invariance")
{
    const auto c = catalog("pam", 8, CatalogLabeling::Brgc, BitProbabilities({0.4, 0.6, 0.3}));
    const auto n = normalize_to_nbc(c);
    for (double db : {-10.0, 0.0, 10.0}) {
        CHECK(std::abs(bicm_gmi(c, from_db(db)) - bicm_gmi(n, from_db(db))) < 1e-9);
    }
}

TEST_CASE("sweep results do not depend on the thread count")
{
    const auto c = catalog("qam", 16, CatalogLabeling::Brgc, BitProbabilities({0.35, 0.5, 0.35, 0.5}));
    const auto grid = snr_grid_db(-10.0, 10.0, 2.5);
    const auto one = gmi_sweep(c, grid, {}, 1);
    const auto many = gmi_sweep(c, grid, {}, 4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(one.points[i].bicm_gmi == many.points[i].bicm_gmi);
        CHECK(one.points[i].cm_mi == many.points[i].cm_mi);
    }
}

TEST_CASE("Monte-Carlo estimate")
{
    const auto c = catalog("psk", 8, CatalogLabeling::Nbc, BitProbabilities({0.5, 0.7, 0.9}));
    const auto a = mc_gmi(c, 1.0, 20000, 7);
    const auto b = mc_gmi(c, 1.0, 20000, 7);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(std::abs(a.value - bicm_gmi(c, 1.0)) <= 4.0 * a.std_error);
    const auto low = mc_gmi(c, 1e-6, 20000, 3);
    CHECK(std::abs(low.value) < 1e-4);
}
