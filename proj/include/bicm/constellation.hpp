#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bicm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// M x N matrix of real symbol vectors, M = 2^m.
class Alphabet {
public:
    explicit Alphabet(Matrix points);

    const Matrix& points() const { return points_; }
    int size() const { return static_cast<int>(points_.rows()); }
    int dim() const { return static_cast<int>(points_.cols()); }
    int bits() const { return bits_; }

private:
    Matrix points_;
    int bits_ = 0;
};

/// Zero-bit probabilities b[k] = P(C_k = 0), each strictly inside (0,1).
class BitProbabilities {
public:
    explicit BitProbabilities(std::vector<double> zero_probs);

    static BitProbabilities uniform(int m);

    int size() const { return static_cast<int>(zero_.size()); }
    double zero(int k) const { return zero_[k]; }
    double one(int k) const { return 1.0 - zero_[k]; }
    /// P(C_k = u).
    double prob(int k, int u) const { return u == 0 ? zero(k) : one(k); }
    std::span<const double> values() const { return zero_; }
    bool is_uniform() const;

private:
    std::vector<double> zero_;
};

/// Product-form symbol probabilities P_i = prod_k P(C_k = n_{i,k}).
struct SymbolDistribution {
    Vector p;
};

SymbolDistribution symbol_distribution(const BitProbabilities& b);

/// Bit k of the NBC label of index i (LSB in column 0).
inline int nbc_bit(std::uint32_t i, int k) { return static_cast<int>((i >> k) & 1U); }

inline std::uint32_t gray_code(std::uint32_t r) { return r ^ (r >> 1); }

enum class LabelingKind { Nbc, Brgc, Explicit };

/// M x m binary labeling. Row r is stored as the integer whose bit k is the
/// label bit in column k.
class Labeling {
public:
    Labeling(std::vector<std::uint32_t> labels, int m, LabelingKind kind = LabelingKind::Explicit);

    static Labeling from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return static_cast<int>(labels_.size()); }
    int bits() const { return bits_; }
    LabelingKind kind() const { return kind_; }
    std::uint32_t label(int row) const { return labels_[row]; }
    int bit(int row, int k) const { return nbc_bit(labels_[row], k); }
    std::span<const std::uint32_t> labels() const { return labels_; }
    std::vector<std::vector<int>> rows() const;

    bool is_nbc() const;
    /// True when the rows are a permutation of the NBC rows.
    bool is_permutation() const;

private:
    std::vector<std::uint32_t> labels_;
    int bits_ = 0;
    LabelingKind kind_ = LabelingKind::Explicit;
};

Labeling nbc(int m);
/// Binary reflected Gray code on row indices, column 0 changing fastest
/// (m = 2 gives rows 00, 10, 11, 01).
Labeling brgc(int m);
/// Labeling with the column order reversed.
Labeling reverse_bit_order(const Labeling& labeling);

class Constellation {
public:
    Constellation(Alphabet alphabet, BitProbabilities bits, Labeling labeling);
    /// NBC-labeled constellation.
    Constellation(Alphabet alphabet, BitProbabilities bits);

    const Alphabet& alphabet() const { return alphabet_; }
    const BitProbabilities& bits() const { return bits_; }
    const Labeling& labeling() const { return labeling_; }
    const Matrix& points() const { return alphabet_.points(); }
    int size() const { return alphabet_.size(); }
    int dim() const { return alphabet_.dim(); }
    int m() const { return alphabet_.bits(); }

    /// Probability of each row under the attached labeling.
    Vector row_probabilities() const;

private:
    Alphabet alphabet_;
    BitProbabilities bits_;
    Labeling labeling_;
};

/// Reorders the rows so that the symbol carrying label i sits at row i.
Constellation normalize_to_nbc(const Constellation& c);

enum class CatalogLabeling {
    Nbc,
    Brgc,
    /// BRGC with column 0 holding the most significant Gray bit.
    BrgcMsbFirst,
};

/// Named alphabets: "pam", "qam", "psk", "ampm8", "star8qam", and the alias
/// "pam8-brgc" (8-PAM with MSB-first BRGC).
Constellation catalog(std::string_view name, int M, CatalogLabeling labeling = CatalogLabeling::Nbc,
                      std::optional<BitProbabilities> bits = std::nullopt);

bool is_power_of_two(std::int64_t v);
int log2_exact(std::int64_t v);

} // namespace bicm
