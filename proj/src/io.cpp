#include "bicm/io.hpp"

#include "bicm/error.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

namespace bicm::io {

using nlohmann::json;

namespace {

std::vector<double> read_probs(const json& j, const char* key)
{
    if (!j.is_array()) {
        throw InputError(std::string("'") + key + "' must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw InputError(std::string("'") + key + "' must contain numbers only");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

json probs_to_json(const BitProbabilities& b) { return json(std::vector<double>(b.values().begin(), b.values().end())); }

bool is_brgc_sequence(const Labeling& l)
{
    for (int r = 0; r < l.size(); ++r) {
        if (l.label(r) != gray_code(static_cast<std::uint32_t>(r))) {
            return false;
        }
    }
    return true;
}

} // namespace

ConstellationDoc constellation_from_json(const json& j)
{
    if (!j.is_object()) {
        throw InputError("constellation document must be a JSON object");
    }
    for (const char* key : {"m", "n", "points", "bit_probs"}) {
        if (!j.contains(key)) {
            throw InputError(std::string("constellation document lacks '") + key + "'");
        }
    }
    if (!j["m"].is_number_integer() || !j["n"].is_number_integer()) {
        throw InputError("'m' and 'n' must be integers");
    }
    const int m = j["m"].get<int>();
    const int n = j["n"].get<int>();
    if (m < 1 || m > 20 || n < 1) {
        throw InputError("'m' must lie in [1, 20] and 'n' must be positive");
    }
    const auto& pts = j["points"];
    const std::size_t M = std::size_t{1} << m;
    if (!pts.is_array() || pts.size() != M) {
        throw InputError("'points' must hold 2^m = " + std::to_string(M) + " rows");
    }
    Matrix points(static_cast<Eigen::Index>(M), n);
    for (std::size_t r = 0; r < M; ++r) {
        const auto& row = pts[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw InputError("point " + std::to_string(r) + " must have n = " + std::to_string(n) + " coordinates");
        }
        for (int d = 0; d < n; ++d) {
            if (!row[static_cast<std::size_t>(d)].is_number()) {
                throw InputError("point coordinates must be numbers");
            }
            points(static_cast<Eigen::Index>(r), d) = row[static_cast<std::size_t>(d)].get<double>();
        }
    }
    BitProbabilities bits(read_probs(j["bit_probs"], "bit_probs"));

    Labeling labeling = nbc(m);
    if (j.contains("labeling")) {
        const auto& lj = j["labeling"];
        if (lj.is_string()) {
            const auto s = lj.get<std::string>();
            if (s == "brgc") {
                labeling = brgc(m);
            } else if (s != "nbc") {
                throw InputError("unknown labeling '" + s + "'");
            }
        } else if (lj.is_array()) {
            std::vector<std::vector<int>> rows;
            for (const auto& row : lj) {
                if (!row.is_array()) {
                    throw InvalidLabelingError("labeling rows must be arrays");
                }
                std::vector<int> r;
                for (const auto& v : row) {
                    if (!v.is_number_integer()) {
                        throw InvalidLabelingError("labeling entries must be 0 or 1");
                    }
                    r.push_back(v.get<int>());
                }
                rows.push_back(std::move(r));
            }
            labeling = Labeling::from_rows(rows);
        } else {
            throw InputError("'labeling' must be \"nbc\", \"brgc\" or a binary matrix");
        }
    }

    ConstellationDoc doc{Constellation(Alphabet(std::move(points)), std::move(bits), std::move(labeling)),
                         std::nullopt};
    if (j.contains("source_bit_probs")) {
        doc.source_bits = BitProbabilities(read_probs(j["source_bit_probs"], "source_bit_probs"));
    }
    return doc;
}

json to_json(const Constellation& c, const std::optional<BitProbabilities>& source_bits)
{
    json j;
    j["m"] = c.m();
    j["n"] = c.dim();
    json pts = json::array();
    for (int r = 0; r < c.size(); ++r) {
        json row = json::array();
        for (int d = 0; d < c.dim(); ++d) {
            row.push_back(c.points()(r, d));
        }
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    j["bit_probs"] = probs_to_json(c.bits());
    if (c.labeling().is_nbc()) {
        j["labeling"] = "nbc";
    } else if (is_brgc_sequence(c.labeling())) {
        j["labeling"] = "brgc";
    } else {
        j["labeling"] = c.labeling().rows();
    }
    if (source_bits) {
        j["source_bit_probs"] = probs_to_json(*source_bits);
    }
    return j;
}

ConstellationDoc read_constellation(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
    return constellation_from_json(j);
}

void write_json(const json& j, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << j.dump(2) << '\n';
}

json to_json(const LowGmiParams& p)
{
    return json{{"mu", std::vector<double>(p.mu.data(), p.mu.data() + p.mu.size())},
                {"es", p.es},
                {"alpha", p.alpha},
                {"alpha_inv_db", p.alpha_inv_db()}};
}

json to_json(const FooReport& r)
{
    return json{{"is_foo", r.is_foo},
                {"mean_norm", r.mean_norm},
                {"residual", r.residual},
                {"alpha_gap", r.alpha_gap}};
}

json to_json(const GmiPoint& p)
{
    return json{{"snr", p.snr},
                {"snr_db", to_db(p.snr)},
                {"cm_mi", p.cm_mi},
                {"bicm_gmi", p.bicm_gmi},
                {"ebno_cm_db", p.ebno_cm_db},
                {"ebno_bicm_db", p.ebno_bicm_db}};
}

void write_curve_csv(std::ostream& os, const GmiCurve& curve)
{
    const auto old_precision = os.precision();
    os << kCurveCsvHeader << '\n';
    os << std::setprecision(17);
    for (const auto& p : curve.points) {
        os << to_db(p.snr) << ',' << p.ebno_cm_db << ',' << p.ebno_bicm_db << ',' << p.cm_mi << ',' << p.bicm_gmi
           << '\n';
    }
    os.precision(old_precision);
}

} // namespace bicm::io
