#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidnorm {

/// One letter of a braid word: a standard generator s_i or a band generator
/// a_{i,j} (Birman-Ko-Lee), raised to +1 or -1. Indices are 1-based strands.
/// A standard letter s_i is stored with j == i + 1 so that it coincides with
/// a_{i,i+1} for band bookkeeping.
struct BraidLetter {
    enum class Kind : unsigned char { standard, band };

    Kind kind = Kind::standard;
    int i = 1;
    int j = 2;
    int sign = 1;

    static constexpr BraidLetter sigma(int i, int sign = 1) noexcept {
        return {Kind::standard, i, i + 1, sign};
    }
    static constexpr BraidLetter band(int i, int j, int sign = 1) noexcept {
        return {Kind::band, i, j, sign};
    }

    constexpr bool positive() const noexcept { return sign > 0; }
    constexpr BraidLetter inverse() const noexcept { return {kind, i, j, -sign}; }
    /// Band span j - i; 1 for standard letters and a_{i,i+1}.
    constexpr int span() const noexcept { return j - i; }

    friend constexpr auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

/// A braid on `strands()` strands, read left to right. Immutable once built.
class BraidWord {
public:
    BraidWord() = default;
    /// Throws DomainError if a letter index does not fit on `n` strands.
    BraidWord(int n, std::vector<BraidLetter> letters);

    static BraidWord identity(int n) { return BraidWord(n, {}); }

    int strands() const noexcept { return n_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::span<const BraidLetter> letters() const noexcept { return letters_; }
    const BraidLetter& operator[](std::size_t k) const { return letters_[k]; }

    /// True when no band letter with span > 1 occurs.
    bool is_standard() const noexcept;

    /// Formal inverse: reversed letters with flipped signs.
    BraidWord inverse() const;
    /// Concatenation; both words must have the same strand count.
    BraidWord operator*(const BraidWord& rhs) const;
    /// Same letters on `n >= strands()` strands.
    BraidWord widened(int n) const;
    /// Copy with `letter` appended (strand count may grow to fit it).
    BraidWord appended(BraidLetter letter) const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int n_ = 1;
    std::vector<BraidLetter> letters_;
};

/// Parse whitespace-separated tokens `s<i>` and `a<i>,<j>`, each with an
/// optional `^<k>` suffix, on `n` strands.
BraidWord parse_braid(std::string_view text, int n);

/// Inverse of parse_braid up to run-length grouping.
std::string to_string(const BraidWord& word);

/// Replace every band letter a_{i,j}^{+-1} by its standard expansion
/// s_i^-1 ... s_{j-2}^-1 s_{j-1} s_{j-2} ... s_i (inverted for -1).
BraidWord band_to_standard(const BraidWord& word);

/// perm[s] = bottom position of the strand entering at top position s.
/// Positions are 0-based here.
using Permutation = std::vector<int>;

Permutation permutation(const BraidWord& word);
/// Cycles of a permutation, each listed from its smallest element, sorted by it.
std::vector<std::vector<int>> cycles(const Permutation& perm);

enum class GeneratorUse : unsigned char { absent, positive, negative, mixed };

struct GeneratorProfile {
    int pos = 0;   ///< positive standard letters after band expansion
    int neg = 0;   ///< negative standard letters after band expansion
    int pos_b = 0; ///< positive letters counted as bands (unexpanded)
    int neg_b = 0;
    std::vector<GeneratorUse> use; ///< use[i-1] summarises s_i
    bool homogeneous = false;
    int n_n = 0; ///< generators occurring only negatively
    int n_p = 0; ///< generators occurring only positively
};

GeneratorProfile generator_profile(const BraidWord& word);

} // namespace braidnorm
