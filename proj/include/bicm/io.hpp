#pragma once

#include "bicm/constellation.hpp"
#include "bicm/foo.hpp"
#include "bicm/gmi_numeric.hpp"
#include "bicm/low_gmi.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace bicm::io {

/// Constellation document:
///   {"m": int, "n": int, "points": [[...], ...], "bit_probs": [...],
///    "labeling": "nbc" | "brgc" | [[0|1, ...], ...]}
/// A transformed alphabet additionally records the probabilities it was
/// derived from under "source_bit_probs".
struct ConstellationDoc {
    Constellation constellation;
    std::optional<BitProbabilities> source_bits;
};

ConstellationDoc constellation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Constellation& c, const std::optional<BitProbabilities>& source_bits = std::nullopt);

ConstellationDoc read_constellation(const std::string& path);
void write_json(const nlohmann::json& j, const std::string& path);

nlohmann::json to_json(const LowGmiParams& p);
nlohmann::json to_json(const FooReport& r);
nlohmann::json to_json(const GmiPoint& p);

inline constexpr const char* kCurveCsvHeader = "snr_db,ebno_cm_db,ebno_bicm_db,cm_mi,bicm_gmi";

/// One row per point, 17 significant digits.
void write_curve_csv(std::ostream& os, const GmiCurve& curve);

} // namespace bicm::io
