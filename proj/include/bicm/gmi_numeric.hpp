#pragma once

#include "bicm/constellation.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bicm {

enum class ChannelKind {
    /// Fixed unit gain, E[H^2] = 1. Fading kinds would need their own
    /// expectation over H.
    Awgn,
};

/// Noise with variance N0/2 per real dimension.
struct ChannelSpec {
    ChannelKind kind = ChannelKind::Awgn;
    double n0 = 1.0;
};

inline constexpr int kDefaultQuadratureOrder = 40;
inline constexpr int kMinQuadratureOrder = 8;

/// Gauss-Hermite nodes per dimension; the N-dimensional rule is the product.
struct QuadratureSpec {
    int order = kDefaultQuadratureOrder;
};

struct GmiPoint {
    /// Linear SNR = Es / N0.
    double snr = 0.0;
    double cm_mi = 0.0;
    double bicm_gmi = 0.0;
    /// 10 log10(snr / rate) with rate = cm_mi resp. bicm_gmi.
    double ebno_cm_db = 0.0;
    double ebno_bicm_db = 0.0;
};

struct GmiCurve {
    std::string label;
    std::vector<GmiPoint> points;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Coded-modulation mutual information I(X;Y) in bit per symbol.
double cm_mi(const Constellation& c, double snr, const QuadratureSpec& quad = {});

/// BICM generalized mutual information sum_k I(C_k;Y) in bit per symbol.
double bicm_gmi(const Constellation& c, double snr, const QuadratureSpec& quad = {});

/// Both quantities from a single pass over the quadrature nodes.
GmiPoint gmi_point(const Constellation& c, double snr, const QuadratureSpec& quad = {});

/// Same as above for an explicit channel; snr is derived from Es / N0.
GmiPoint gmi_point(const Constellation& c, const ChannelSpec& channel, const QuadratureSpec& quad = {});

/// from, from + step, ... up to and including `to` (within half a step).
std::vector<double> snr_grid_db(double from, double to, double step);

/// Evaluates every grid point (dB). Points are independent and are spread
/// over `threads` workers (0 = hardware concurrency); results keep grid order.
GmiCurve gmi_sweep(const Constellation& c, std::span<const double> snr_db, const QuadratureSpec& quad = {},
                   unsigned threads = 0);

/// Slope of the BICM-GMI at SNR = 0 from I(s)/s at s = 1e-4 and 2e-4 with one
/// Richardson step.
double alpha_numeric(const Constellation& c, const QuadratureSpec& quad = {});

/// Monte-Carlo estimate of the BICM-GMI integrand with its standard error.
/// Deterministic for a fixed seed.
McEstimate mc_gmi(const Constellation& c, double snr, std::uint64_t samples, std::uint64_t seed);

/// AWGN capacity for real (dims = 1) or complex (dims = 2) signalling.
double awgn_capacity(double snr, int dims);

/// Entropy in bits of a probability vector.
double entropy_bits(const Vector& p);

double to_db(double linear);
double from_db(double db);

} // namespace bicm
