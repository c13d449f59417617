#pragma once

#include "braidnorm/braid.hpp"
#include "braidnorm/diagram.hpp"
#include "braidnorm/multipoly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace braidnorm {

/// A cohomology class C = (C_1, ..., C_r) of the link complement, in the
/// basis dual to the meridians, ordered by component id.
struct CohClass {
    std::vector<int> c;

    int size() const noexcept { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    bool is_zero() const noexcept;

    friend bool operator==(const CohClass&, const CohClass&) = default;
};

/// Parse comma-separated integers, e.g. "2,1".
CohClass parse_class(std::string_view text);

/// pos - neg - n. With a subset of component ids, only crossings between
/// strands of those components count and n is their strand total.
long long bennequin_number(const BraidWord& word,
                           const std::optional<std::vector<int>>& subset = std::nullopt);

/// cr(L_i, L_i) - n_i + sum_{j != i} lk(L_i, L_j).
long long relative_bennequin(const BraidWord& word, int i);
long long relative_bennequin(const ClosureProfile& profile, int i);

/// Sum of relative_bennequin over the subset.
long long relative_bennequin_subset(const BraidWord& word, const std::vector<int>& subset);

/// The cabled diagram L' for a class C >= 0 together with the sublink L''.
struct CablePair {
    BraidWord lprime;
    std::vector<int> subset;          ///< L' components forming L''
    std::vector<int> origin;          ///< L' component -> original component
    std::vector<int> strand_origin;   ///< L' strand -> original strand
    std::vector<long long> p;         ///< framing p_i = -sum_{j != i} C_j lk(L_i, L_j)
    std::vector<int> q;               ///< q_i = C_i
    std::vector<int> m;               ///< offset of the inserted twist (-1 if none)
    std::vector<long long> twist;     ///< exponent p_i - C_i cr(L_i, L_i) of the twist
};

/// Build L' and L''. Throws DomainError for a negative entry, an all-zero
/// class, or a length mismatch.
CablePair cable_pair(const BraidWord& word, const CohClass& C);

/// sum_i C_i * relative_bennequin(word, i).
long long class_lower_bound(const BraidWord& word, const CohClass& C);

/// beta_t(L'') + sum over C_i = 0 of |sum_j C_j lk(L_i, L_j)|.
long long scholium_lower_bound(const BraidWord& word, const CohClass& C);

enum class LowerSource : unsigned char { corollary, scholium, direct };
enum class UpperSource : unsigned char { generalized_seifert, seminorm_sum };

/// Lower/upper bracket for the Thurston norm ||C||_T.
struct NormBracket {
    long long lower = 0;
    long long upper = 0;
    LowerSource lower_source = LowerSource::corollary;
    UpperSource upper_source = UpperSource::seminorm_sum;
    bool determined = false;

    long long corollary = 0; ///< class_lower_bound
    long long scholium = 0;  ///< scholium_lower_bound
};

/// Bracket ||C||_T between the relative Bennequin bounds and surfaces read
/// off the diagram.
///
/// The upper bound uses subadditivity over the layers 1[C >= t] of C; each
/// layer is bounded by the generalized Seifert surface of its sublink, by the
/// sum of the single-component surfaces (chi = n_j - u_j - l_j), and for the
/// full link of a band word by the band surface. For homogeneous words
/// Seifert's surface is minimal, the norm is additive and the bracket closes
/// with lower_source = direct.
///
/// Throws DomainError for negative entries (reorient and re-braid first) and
/// when a component with C_j > 0 bounds an unpierced disk in the diagram
/// (an unlinked unknotted component).
NormBracket thurston_bracket(const BraidWord& word, const CohClass& C);

struct McMullenReport {
    BigInt alexander;   ///< ||C||_A
    long long bound = 0; ///< upper, plus 1 for a knot
    bool holds = false;  ///< ||C||_A <= bound
    bool has_gap = false;
    BigInt gap;          ///< upper - ||C||_A, reported when the bracket is determined
};

/// Compare the Alexander norm of `poly` with the norm bracket. Throws
/// DomainError when the dimensions of poly, C and r disagree.
McMullenReport mcmullen_check(const MultiPoly& poly, const NormBracket& bracket, const CohClass& C, int r);

const char* to_string(LowerSource s) noexcept;
const char* to_string(UpperSource s) noexcept;

} // namespace braidnorm
