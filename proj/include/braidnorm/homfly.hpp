#pragma once

#include "braidnorm/braid.hpp"
#include "braidnorm/laurent.hpp"

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <unordered_map>

namespace braidnorm {

/// Permutation of {0..n-1} in one-line notation, packed four bits per entry
/// (entry p in bits 4p..4p+3). Supports n <= 16.
using PackedPerm = std::uint64_t;

PackedPerm pack_identity(int n);
int perm_at(PackedPerm w, int p);

/// Linear combination of permutation-braid basis elements T_w of the Hecke
/// algebra H_n, where T_s^2 = 1 + z T_s.
struct TraceElement {
    int n = 1;
    std::map<PackedPerm, LaurentVZ> comb;
};

/// Braid polynomial P(v, z) through the Markov trace on H_n.
///
/// A word is multiplied out into the basis T_w; tr_n(T_w) is delta * tr_{n-1}
/// when w fixes the last point, and otherwise w = u s_{n-2} ... s_k with u in
/// S_{n-1}, so that tr_n(T_w) = tr_{n-1}(T_{n-3} ... T_k T_u). Trace values
/// are cached per (n, w); the cache is safe to share between threads.
class HomflyEvaluator {
public:
    static constexpr int max_strands = 16;

    TraceElement linearize(const BraidWord& word) const;
    LaurentVZ trace(const TraceElement& x);
    LaurentVZ trace_basis(int n, PackedPerm w);
    LaurentVZ operator()(const BraidWord& word) { return trace(linearize(word)); }

    std::size_t cache_size() const;
    void clear();

    /// Process-wide instance used by the free functions below.
    static HomflyEvaluator& shared();

private:
    struct Key {
        int n;
        PackedPerm w;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<PackedPerm>{}(k.w * 31u + static_cast<PackedPerm>(k.n));
        }
    };
    LaurentVZ compute(int n, PackedPerm w);

    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, LaurentVZ, KeyHash> cache_;
};

/// P(word). Band letters are expanded first. Throws DomainError above
/// HomflyEvaluator::max_strands strands.
LaurentVZ homfly_p(const BraidWord& word);

/// H = v^(beta_t + 1) z P / (1 - v^2); the HOMFLY polynomial of the closure.
LaurentVZ homfly_h(const BraidWord& word);

/// Conway polynomial: z P / (1 - v^2) at v = 1.
LaurentVZ conway(const BraidWord& word);

struct HomflyReport {
    LaurentVZ P;
    LaurentVZ H;
    int e = 0;   ///< min v-degree of H
    int e_P = 0; ///< min v-degree of P
    LaurentVZ conway;
    long long beta_t = 0;
};

HomflyReport homfly_report(const BraidWord& word);
/// Report built from a P computed elsewhere (for instance by SkeinOracle).
HomflyReport homfly_report(const BraidWord& word, const LaurentVZ& P);

struct MfwReport {
    long long beta_t = 0;
    int e = 0;
    bool holds = false;
    long long slack = 0; ///< e - (beta_t + 1)
};

/// beta_t + 1 <= e.
MfwReport mfw_check(const BraidWord& word);

struct BennequinCertificate {
    bool certified = false;
    LaurentVZ p0; ///< P(0, z)
};

/// P(0, z) != 0 certifies that beta_t of the word is maximal for its closure.
BennequinCertificate max_bennequin_certificate(const BraidWord& word);

struct TopTermReport {
    LaurentVZ predicted;
    LaurentVZ observed;
    bool match = false;
};

/// Predicted (-1)^(neg - n_n) (1 - v^2) v^(2 n_n) z^(|w| - n) against the
/// top z-degree part of P. Throws DomainError unless the word is homogeneous.
TopTermReport homogeneous_top_term(const BraidWord& word);

/// f_0 = 1/z, f_1 = 0, f_l = f_{l-2} - z f_{l-1}: P(0,z)(s2^-l s1^k) = f_l P(0,z)(s1^k).
LaurentVZ kanda_factor(int l);

} // namespace braidnorm
