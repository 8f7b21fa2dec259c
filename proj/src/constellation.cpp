#include "bicm/constellation.hpp"

#include "bicm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bicm {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_exact(std::int64_t v)
{
    if (!is_power_of_two(v)) {
        throw InputError("size " + std::to_string(v) + " is not a power of two");
    }
    int m = 0;
    while ((std::int64_t{1} << m) < v) {
        ++m;
    }
    return m;
}

Alphabet::Alphabet(Matrix points) : points_(std::move(points))
{
    if (points_.rows() < 2 || !is_power_of_two(points_.rows())) {
        throw InputError("alphabet must have 2^m rows with m >= 1, got " + std::to_string(points_.rows()));
    }
    if (points_.cols() < 1) {
        throw InputError("alphabet dimension must be at least 1");
    }
    if (!points_.allFinite()) {
        throw InputError("alphabet contains non-finite entries");
    }
    bits_ = log2_exact(points_.rows());
}

BitProbabilities::BitProbabilities(std::vector<double> zero_probs) : zero_(std::move(zero_probs))
{
    if (zero_.empty()) {
        throw InputError("bit probability vector is empty");
    }
    for (std::size_t k = 0; k < zero_.size(); ++k) {
        const double v = zero_[k];
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw InputError("bit probability b[" + std::to_string(k) + "] outside [0,1]");
        }
        if (v == 0.0 || v == 1.0) {
            throw DegenerateShapingError("bit probability b[" + std::to_string(k) +
                                         "] is degenerate (0 or 1); remove the bit instead");
        }
    }
}

BitProbabilities BitProbabilities::uniform(int m)
{
    if (m < 1) {
        throw InputError("bit count must be >= 1");
    }
    return BitProbabilities(std::vector<double>(static_cast<std::size_t>(m), 0.5));
}

bool BitProbabilities::is_uniform() const
{
    return std::all_of(zero_.begin(), zero_.end(), [](double v) { return v == 0.5; });
}

SymbolDistribution symbol_distribution(const BitProbabilities& b)
{
    const int m = b.size();
    const std::uint32_t M = 1U << m;
    Vector p(M);
    for (std::uint32_t i = 0; i < M; ++i) {
        double prod = 1.0;
        for (int k = 0; k < m; ++k) {
            prod *= b.prob(k, nbc_bit(i, k));
        }
        p[i] = prod;
    }
    return {p};
}

Labeling::Labeling(std::vector<std::uint32_t> labels, int m, LabelingKind kind)
    : labels_(std::move(labels)), bits_(m), kind_(kind)
{
    if (m < 1 || m > 30) {
        throw InvalidLabelingError("labeling bit count out of range");
    }
    if (labels_.size() != (std::size_t{1} << m)) {
        throw InvalidLabelingError("labeling must have 2^m rows");
    }
    for (auto l : labels_) {
        if (l >= (1U << m)) {
            throw InvalidLabelingError("label " + std::to_string(l) + " does not fit in " + std::to_string(m) + " bits");
        }
    }
}

Labeling Labeling::from_rows(const std::vector<std::vector<int>>& rows)
{
    if (rows.empty()) {
        throw InvalidLabelingError("labeling has no rows");
    }
    const std::size_t m = rows.front().size();
    if (m == 0 || m > 30) {
        throw InvalidLabelingError("labeling rows must have between 1 and 30 columns");
    }
    std::vector<std::uint32_t> labels;
    labels.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != m) {
            throw InvalidLabelingError("labeling rows have inconsistent lengths");
        }
        std::uint32_t v = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (row[k] != 0 && row[k] != 1) {
                throw InvalidLabelingError("labeling entries must be 0 or 1");
            }
            v |= static_cast<std::uint32_t>(row[k]) << k;
        }
        labels.push_back(v);
    }
    Labeling out(std::move(labels), static_cast<int>(m));
    if (out.is_nbc()) {
        out.kind_ = LabelingKind::Nbc;
    }
    return out;
}

std::vector<std::vector<int>> Labeling::rows() const
{
    std::vector<std::vector<int>> out(labels_.size(), std::vector<int>(static_cast<std::size_t>(bits_)));
    for (std::size_t r = 0; r < labels_.size(); ++r) {
        for (int k = 0; k < bits_; ++k) {
            out[r][static_cast<std::size_t>(k)] = nbc_bit(labels_[r], k);
        }
    }
    return out;
}

bool Labeling::is_nbc() const
{
    for (std::size_t r = 0; r < labels_.size(); ++r) {
        if (labels_[r] != r) {
            return false;
        }
    }
    return true;
}

bool Labeling::is_permutation() const
{
    std::vector<bool> seen(labels_.size(), false);
    for (auto l : labels_) {
        if (seen[l]) {
            return false;
        }
        seen[l] = true;
    }
    return true;
}

Labeling nbc(int m)
{
    if (m < 1) {
        throw InputError("NBC requires m >= 1");
    }
    std::vector<std::uint32_t> labels(std::size_t{1} << m);
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
        labels[i] = i;
    }
    return Labeling(std::move(labels), m, LabelingKind::Nbc);
}

Labeling brgc(int m)
{
    if (m < 1) {
        throw InputError("BRGC requires m >= 1");
    }
    std::vector<std::uint32_t> labels(std::size_t{1} << m);
    for (std::uint32_t r = 0; r < labels.size(); ++r) {
        labels[r] = gray_code(r);
    }
    return Labeling(std::move(labels), m, LabelingKind::Brgc);
}

Labeling reverse_bit_order(const Labeling& labeling)
{
    const int m = labeling.bits();
    std::vector<std::uint32_t> labels(labeling.labels().begin(), labeling.labels().end());
    for (auto& l : labels) {
        std::uint32_t rev = 0;
        for (int k = 0; k < m; ++k) {
            rev |= static_cast<std::uint32_t>(nbc_bit(l, k)) << (m - 1 - k);
        }
        l = rev;
    }
    return Labeling(std::move(labels), m);
}

Constellation::Constellation(Alphabet alphabet, BitProbabilities bits, Labeling labeling)
    : alphabet_(std::move(alphabet)), bits_(std::move(bits)), labeling_(std::move(labeling))
{
    if (bits_.size() != alphabet_.bits()) {
        throw InputError("bit probability count " + std::to_string(bits_.size()) + " does not match m = " +
                         std::to_string(alphabet_.bits()));
    }
    if (labeling_.size() != alphabet_.size() || labeling_.bits() != alphabet_.bits()) {
        throw InvalidLabelingError("labeling dimensions do not match the alphabet");
    }
    if (!labeling_.is_permutation()) {
        throw InvalidLabelingError("labeling rows are not distinct");
    }
}

Constellation::Constellation(Alphabet alphabet, BitProbabilities bits)
    : Constellation(alphabet, std::move(bits), nbc(alphabet.bits()))
{
}

Vector Constellation::row_probabilities() const
{
    const auto p = symbol_distribution(bits_).p;
    Vector out(size());
    for (int r = 0; r < size(); ++r) {
        out[r] = p[labeling_.label(r)];
    }
    return out;
}

Constellation normalize_to_nbc(const Constellation& c)
{
    const auto& labeling = c.labeling();
    if (!labeling.is_permutation()) {
        throw InvalidLabelingError("labeling is not a permutation of the NBC");
    }
    if (labeling.is_nbc()) {
        return Constellation(c.alphabet(), c.bits(), nbc(c.m()));
    }
    Matrix points(c.size(), c.dim());
    for (int r = 0; r < c.size(); ++r) {
        points.row(labeling.label(r)) = c.points().row(r);
    }
    return Constellation(Alphabet(std::move(points)), c.bits(), nbc(c.m()));
}

namespace {

std::vector<double> pam_levels(int M)
{
    std::vector<double> levels(static_cast<std::size_t>(M));
    for (int p = 0; p < M; ++p) {
        levels[static_cast<std::size_t>(p)] = static_cast<double>(2 * p - (M - 1));
    }
    return levels;
}

Labeling labeling_for(CatalogLabeling choice, int m)
{
    switch (choice) {
    case CatalogLabeling::Nbc:
        return nbc(m);
    case CatalogLabeling::Brgc:
        return brgc(m);
    case CatalogLabeling::BrgcMsbFirst:
        return reverse_bit_order(brgc(m));
    }
    throw InputError("unknown labeling choice");
}

// Square QAM in row-major order: row r = pI + L*pQ with L = sqrt(M). The
// in-phase coordinate uses the low m/2 label bits, quadrature the high ones.
Constellation make_qam(int M, CatalogLabeling choice, const BitProbabilities& bits)
{
    const int m = log2_exact(M);
    if (m % 2 != 0) {
        throw InputError("square QAM requires an even number of bits, got M = " + std::to_string(M));
    }
    const int half = m / 2;
    const int L = 1 << half;
    const auto levels = pam_levels(L);
    const Labeling axis = labeling_for(choice, half);
    Matrix points(M, 2);
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(M));
    for (int q = 0; q < L; ++q) {
        for (int i = 0; i < L; ++i) {
            const int r = i + L * q;
            points(r, 0) = levels[static_cast<std::size_t>(i)];
            points(r, 1) = levels[static_cast<std::size_t>(q)];
            labels[static_cast<std::size_t>(r)] = axis.label(i) | (axis.label(q) << half);
        }
    }
    const auto kind = choice == CatalogLabeling::Nbc ? LabelingKind::Nbc : LabelingKind::Explicit;
    return Constellation(Alphabet(std::move(points)), bits, Labeling(std::move(labels), m, kind));
}

} // namespace

Constellation catalog(std::string_view name, int M, CatalogLabeling labeling, std::optional<BitProbabilities> bits)
{
    if (name == "pam8-brgc") {
        if (M != 8) {
            throw InputError("pam8-brgc is defined for M = 8 only");
        }
        return catalog("pam", 8, CatalogLabeling::BrgcMsbFirst, std::move(bits));
    }
    const int m = log2_exact(M);
    if (M < 2) {
        throw InputError("catalog alphabets need M >= 2");
    }
    const BitProbabilities b = bits ? *bits : BitProbabilities::uniform(m);
    if (b.size() != m) {
        throw InputError("expected " + std::to_string(m) + " bit probabilities, got " + std::to_string(b.size()));
    }

    if (name == "pam") {
        const auto levels = pam_levels(M);
        Matrix points(M, 1);
        for (int p = 0; p < M; ++p) {
            points(p, 0) = levels[static_cast<std::size_t>(p)];
        }
        return Constellation(Alphabet(std::move(points)), b, labeling_for(labeling, m));
    }
    if (name == "qam") {
        return make_qam(M, labeling, b);
    }
    if (name == "psk") {
        Matrix points(M, 2);
        for (int j = 0; j < M; ++j) {
            const double phase = 2.0 * std::numbers::pi * j / M + std::numbers::pi / M;
            points(j, 0) = std::cos(phase);
            points(j, 1) = std::sin(phase);
        }
        return Constellation(Alphabet(std::move(points)), b, labeling_for(labeling, m));
    }
    if (name == "ampm8" || name == "star8qam") {
        if (M != 8) {
            throw InputError(std::string(name) + " is defined for M = 8 only");
        }
        if (labeling != CatalogLabeling::Nbc) {
            throw InputError(std::string(name) + " has a fixed labeling; use nbc");
        }
        Matrix points(8, 2);
        if (name == "ampm8") {
            points << -1, 0, 1, -2, -3, 0, -1, -2, 1, 2, 3, 0, -1, 2, 1, 0;
        } else {
            // Inner square (+-1, +-1): bit 0 flips x, bit 1 flips y. Bit 2
            // selects the outer ring, radius 1 + sqrt(3), rotated 45 degrees
            // counter-clockwise from the matching inner point.
            const double r = 1.0 + std::numbers::sqrt3;
            points << 1, 1, -1, 1, 1, -1, -1, -1, 0, r, -r, 0, r, 0, 0, -r;
        }
        return Constellation(Alphabet(std::move(points)), b, nbc(3));
    }
    throw InputError("unknown catalog alphabet '" + std::string(name) + "'");
}

} // namespace bicm
