#include "bicm/cli.hpp"

#include "bicm/error.hpp"
#include "bicm/foo.hpp"
#include "bicm/gmi_numeric.hpp"
#include "bicm/io.hpp"
#include "bicm/quadrature.hpp"
#include "bicm/low_gmi.hpp"
#include "bicm/shaping_transform.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace bicm::cli {

using nlohmann::json;

namespace {

CatalogLabeling parse_labeling(const std::string& s)
{
    if (s == "nbc") {
        return CatalogLabeling::Nbc;
    }
    if (s == "brgc") {
        return CatalogLabeling::Brgc;
    }
    if (s == "brgc-msb") {
        return CatalogLabeling::BrgcMsbFirst;
    }
    throw InputError("unknown labeling '" + s + "'");
}

std::optional<BitProbabilities> optional_bits(const std::vector<double>& v)
{
    if (v.empty()) {
        return std::nullopt;
    }
    return BitProbabilities(v);
}

// H(C_k) summed over bits: the high-SNR ceiling of the BICM-GMI.
double bit_entropy_sum(const BitProbabilities& b)
{
    double h = 0.0;
    for (int k = 0; k < b.size(); ++k) {
        h -= b.zero(k) * std::log2(b.zero(k)) + b.one(k) * std::log2(b.one(k));
    }
    return h;
}

void write_csv_file(const GmiCurve& curve, const std::string& path)
{
    std::ofstream os(path);
    if (!os) {
        throw InputError("cannot write '" + path + "'");
    }
    io::write_curve_csv(os, curve);
}

std::string format_p(double p)
{
    std::ostringstream os;
    os << p;
    return os.str();
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Low-SNR analysis of shaped BICM constellations", "bicm-shape"};
    app.require_subcommand(1);

    // catalog
    std::string cat_name;
    int cat_m = 0;
    std::vector<double> cat_bits;
    std::string cat_labeling = "nbc";
    std::string cat_out;
    auto* catalog_cmd = app.add_subcommand("catalog", "Emit a named constellation as JSON");
    catalog_cmd->add_option("--name", cat_name, "pam, qam, psk, ampm8, star8qam or pam8-brgc")->required();
    catalog_cmd->add_option("--m", cat_m, "Bits per symbol")->required()->check(CLI::Range(1, 16));
    catalog_cmd->add_option("--bits", cat_bits, "Zero-bit probabilities b0,b1,...")->delimiter(',');
    catalog_cmd->add_option("--labeling", cat_labeling, "nbc, brgc or brgc-msb")
        ->check(CLI::IsMember({"nbc", "brgc", "brgc-msb"}));
    catalog_cmd->add_option("--out", cat_out, "Output file (default: stdout)");

    // transform
    std::string tr_in;
    std::string tr_out;
    bool tr_inverse = false;
    std::vector<double> tr_bits;
    auto* transform_cmd = app.add_subcommand("transform", "Apply the shaping transform or its inverse");
    transform_cmd->add_option("--in", tr_in, "Input constellation JSON")->required();
    transform_cmd->add_option("--out", tr_out, "Output constellation JSON")->required();
    transform_cmd->add_flag("--inverse", tr_inverse, "Map a transformed alphabet back");
    transform_cmd->add_option("--bits", tr_bits, "Target bit probabilities for --inverse")->delimiter(',');

    // params
    std::string pa_in;
    auto* params_cmd = app.add_subcommand("params", "Print the low-GMI parameters");
    params_cmd->add_option("--in", pa_in, "Input constellation JSON")->required();

    // foo-check
    std::string foo_in;
    double foo_tol = kDefaultFooTol;
    auto* foo_cmd = app.add_subcommand("foo-check", "Test first-order optimality (exit 0 if FOO, 3 if not)");
    foo_cmd->add_option("--in", foo_in, "Input constellation JSON")->required();
    foo_cmd->add_option("--tol", foo_tol, "Tolerance relative to sqrt(Es)")->check(CLI::PositiveNumber);

    // gmi
    std::string gmi_in;
    double gmi_snr_db = 0.0;
    int gmi_quad = kDefaultQuadratureOrder;
    std::uint64_t gmi_mc_samples = 0;
    std::uint64_t gmi_seed = 1;
    auto* gmi_cmd = app.add_subcommand("gmi", "Evaluate CM-MI and BICM-GMI at one SNR");
    gmi_cmd->add_option("--in", gmi_in, "Input constellation JSON")->required();
    gmi_cmd->add_option("--snr-db", gmi_snr_db, "SNR in dB")->required();
    gmi_cmd->add_option("--quad", gmi_quad, "Gauss-Hermite order per dimension")
        ->check(CLI::Range(kMinQuadratureOrder, kMaxGaussHermiteOrder));
    auto* mc_opt = gmi_cmd->add_option("--mc-samples", gmi_mc_samples, "Also run a Monte-Carlo estimate")
                       ->check(CLI::Range(std::uint64_t{10000}, std::uint64_t{1} << 40));
    gmi_cmd->add_option("--seed", gmi_seed, "Monte-Carlo seed")->needs(mc_opt);

    // sweep
    std::string sw_in;
    std::string sw_out;
    double sw_from = -35.0;
    double sw_to = 25.0;
    double sw_step = 0.5;
    int sw_quad = kDefaultQuadratureOrder;
    unsigned sw_threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Write CM-MI and BICM-GMI over an SNR grid as CSV");
    sweep_cmd->add_option("--in", sw_in, "Input constellation JSON")->required();
    sweep_cmd->add_option("--out", sw_out, "Output CSV")->required();
    sweep_cmd->add_option("--from", sw_from, "First SNR in dB");
    sweep_cmd->add_option("--to", sw_to, "Last SNR in dB");
    sweep_cmd->add_option("--step", sw_step, "Grid step in dB")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--quad", sw_quad, "Gauss-Hermite order per dimension")
        ->check(CLI::Range(kMinQuadratureOrder, kMaxGaussHermiteOrder));
    sweep_cmd->add_option("--threads", sw_threads, "Worker threads (0 = all cores)");

    // sweep-shaping
    std::string ss_name = "pam8-brgc";
    std::vector<double> ss_p = {0.5, 0.3, 0.2, 0.1, 0.05, 0.01};
    std::string ss_prefix;
    double ss_from = -35.0;
    double ss_to = 25.0;
    double ss_step = 0.5;
    auto* ss_cmd = app.add_subcommand("sweep-shaping", "Low-GMI parameters for b = [0.5, p, p] over a list of p");
    ss_cmd->add_option("--name", ss_name, "Catalog alphabet with m = 3");
    ss_cmd->add_option("--p-list", ss_p, "Values of p")->delimiter(',');
    ss_cmd->add_option("--curve-prefix", ss_prefix, "Also write <prefix>_p<value>.csv curves");
    ss_cmd->add_option("--from", ss_from, "First SNR in dB for curves");
    ss_cmd->add_option("--to", ss_to, "Last SNR in dB for curves");
    ss_cmd->add_option("--step", ss_step, "Grid step in dB for curves")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("bicm-shape");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const auto emit = [&out](const json& j) { out << j.dump(2) << '\n'; };

    try {
        if (catalog_cmd->parsed()) {
            const auto bits = optional_bits(cat_bits);
            const auto c = catalog(cat_name, 1 << cat_m, parse_labeling(cat_labeling), bits);
            if (cat_out.empty()) {
                emit(io::to_json(c));
            } else {
                io::write_json(io::to_json(c), cat_out);
            }
            return kExitOk;
        }

        if (transform_cmd->parsed()) {
            const auto doc = io::read_constellation(tr_in);
            if (!tr_inverse) {
                if (!tr_bits.empty()) {
                    throw InputError("--bits is only meaningful with --inverse");
                }
                const auto c = normalize_to_nbc(doc.constellation);
                const Matrix x_ring = forward(c.points(), c.bits());
                const Constellation t(Alphabet(x_ring), BitProbabilities::uniform(c.m()));
                io::write_json(io::to_json(t, c.bits()), tr_out);
                return kExitOk;
            }
            std::optional<BitProbabilities> target = optional_bits(tr_bits);
            if (!target) {
                target = doc.source_bits;
            }
            if (!target) {
                throw InputError("--inverse needs --bits or a document carrying source_bit_probs");
            }
            const auto c = normalize_to_nbc(doc.constellation);
            if (target->size() != c.m()) {
                throw InputError("--bits must hold m = " + std::to_string(c.m()) + " probabilities");
            }
            const Matrix x = inverse(c.points(), *target);
            io::write_json(io::to_json(Constellation(Alphabet(x), *target)), tr_out);
            return kExitOk;
        }

        if (params_cmd->parsed()) {
            emit(io::to_json(params(io::read_constellation(pa_in).constellation)));
            return kExitOk;
        }

        if (foo_cmd->parsed()) {
            const auto c = normalize_to_nbc(io::read_constellation(foo_in).constellation);
            const auto report = is_foo(c.points(), c.bits(), foo_tol);
            emit(io::to_json(report));
            return report.is_foo ? kExitOk : kExitNotFoo;
        }

        if (gmi_cmd->parsed()) {
            const auto c = io::read_constellation(gmi_in).constellation;
            const double snr = from_db(gmi_snr_db);
            auto j = io::to_json(gmi_point(c, snr, QuadratureSpec{gmi_quad}));
            if (gmi_mc_samples > 0) {
                const auto mc = mc_gmi(c, snr, gmi_mc_samples, gmi_seed);
                j["mc_bicm_gmi"] = mc.value;
                j["mc_std_error"] = mc.std_error;
                j["mc_samples"] = gmi_mc_samples;
                j["mc_seed"] = gmi_seed;
            }
            emit(j);
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            const auto grid = snr_grid_db(sw_from, sw_to, sw_step);
            const auto c = io::read_constellation(sw_in).constellation;
            auto curve = gmi_sweep(c, grid, QuadratureSpec{sw_quad}, sw_threads);
            curve.label = sw_in;
            write_csv_file(curve, sw_out);
            return kExitOk;
        }

        if (ss_cmd->parsed()) {
            if (ss_p.empty()) {
                throw InputError("--p-list is empty");
            }
            std::vector<double> grid;
            if (!ss_prefix.empty()) {
                grid = snr_grid_db(ss_from, ss_to, ss_step);
            }
            json rows = json::array();
            for (double p : ss_p) {
                const BitProbabilities b({0.5, p, p});
                const auto c = catalog(ss_name, 8, CatalogLabeling::Nbc, b);
                const auto lp = params(c);
                rows.push_back({{"p", p},
                                {"alpha", lp.alpha},
                                {"alpha_inv_db", lp.alpha_inv_db()},
                                {"gmi_ceiling", bit_entropy_sum(b)}});
                if (!ss_prefix.empty()) {
                    auto curve = gmi_sweep(c, grid);
                    curve.label = ss_name + " p=" + format_p(p);
                    write_csv_file(curve, ss_prefix + "_p" + format_p(p) + ".csv");
                }
            }
            emit(rows);
            return kExitOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitInput;
}

} // namespace bicm::cli
