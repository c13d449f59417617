#include "braidnorm/homfly.hpp"

#include "braidnorm/bennequin.hpp"
#include "braidnorm/error.hpp"

#include <mutex>
#include <vector>

namespace braidnorm {

namespace {

constexpr PackedPerm nibble = 0xF;

PackedPerm swap_positions(PackedPerm w, int p) {
    const PackedPerm a = (w >> (4 * p)) & nibble;
    const PackedPerm b = (w >> (4 * (p + 1))) & nibble;
    w &= ~((nibble << (4 * p)) | (nibble << (4 * (p + 1))));
    return w | (b << (4 * p)) | (a << (4 * (p + 1)));
}

int position_of(PackedPerm w, int n, int value) {
    for (int p = 0; p < n; ++p)
        if (perm_at(w, p) == value)
            return p;
    throw InternalError("value missing from packed permutation");
}

// Left multiplication by s_g swaps the values g and g+1.
PackedPerm swap_values(PackedPerm w, int n, int g) {
    const int pg = position_of(w, n, g);
    const int ph = position_of(w, n, g + 1);
    w &= ~((nibble << (4 * pg)) | (nibble << (4 * ph)));
    return w | (static_cast<PackedPerm>(g + 1) << (4 * pg)) | (static_cast<PackedPerm>(g) << (4 * ph));
}

// m[w] += sign * z^dz * c
void accumulate(std::map<PackedPerm, LaurentVZ>& m, PackedPerm w, const LaurentVZ& c, int dz,
                int sign = 1) {
    auto [it, inserted] = m.try_emplace(w);
    it->second.add_scaled(c, BigInt(sign), 0, dz);
    if (it->second.is_zero())
        m.erase(it);
}

} // namespace

PackedPerm pack_identity(int n) {
    PackedPerm w = 0;
    for (int p = 0; p < n; ++p)
        w |= static_cast<PackedPerm>(p) << (4 * p);
    return w;
}

int perm_at(PackedPerm w, int p) {
    return static_cast<int>((w >> (4 * p)) & nibble);
}

TraceElement HomflyEvaluator::linearize(const BraidWord& word) const {
    const int n = word.strands();
    if (n > max_strands)
        throw DomainError("the trace evaluator handles at most " + std::to_string(max_strands) +
                          " strands, got " + std::to_string(n));
    TraceElement x;
    x.n = n;
    x.comb.emplace(pack_identity(n), LaurentVZ(1));
    for (const BraidWord expanded = band_to_standard(word); const auto& l : expanded.letters()) {
        const int g = l.i - 1;
        std::map<PackedPerm, LaurentVZ> next;
        for (const auto& [w, c] : x.comb) {
            const bool ascent = perm_at(w, g) < perm_at(w, g + 1);
            const PackedPerm ws = swap_positions(w, g);
            accumulate(next, ws, c, 0);
            if (l.positive() && !ascent)
                accumulate(next, w, c, 1);
            else if (!l.positive() && ascent)
                accumulate(next, w, c, 1, -1);
        }
        x.comb = std::move(next);
    }
    return x;
}

LaurentVZ HomflyEvaluator::trace(const TraceElement& x) {
    LaurentVZ out;
    for (const auto& [w, c] : x.comb)
        out += c * trace_basis(x.n, w);
    return out;
}

LaurentVZ HomflyEvaluator::trace_basis(int n, PackedPerm w) {
    if (n == 0)
        return LaurentVZ(1);
    const Key key{n, w};
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    LaurentVZ value = compute(n, w);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
}

LaurentVZ HomflyEvaluator::compute(int n, PackedPerm w) {
    const PackedPerm low = n > 1 ? (PackedPerm{1} << (4 * (n - 1))) - 1 : 0;
    const int k = position_of(w, n, n - 1);
    if (k == n - 1)
        return loop_value() * trace_basis(n - 1, w & low);

    // u: w with the value n-1 removed from position k.
    PackedPerm u = 0;
    for (int p = 0, q = 0; p < n; ++p) {
        if (p == k)
            continue;
        u |= static_cast<PackedPerm>(perm_at(w, p)) << (4 * q++);
    }
    std::map<PackedPerm, LaurentVZ> x;
    x.emplace(u, LaurentVZ(1));
    for (int g = k; g <= n - 3; ++g) {
        std::map<PackedPerm, LaurentVZ> next;
        for (const auto& [y, c] : x) {
            const bool longer = position_of(y, n - 1, g) < position_of(y, n - 1, g + 1);
            accumulate(next, swap_values(y, n - 1, g), c, 0);
            if (!longer)
                accumulate(next, y, c, 1);
        }
        x = std::move(next);
    }
    LaurentVZ out;
    for (const auto& [y, c] : x)
        out += c * trace_basis(n - 1, y);
    return out;
}

std::size_t HomflyEvaluator::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

void HomflyEvaluator::clear() {
    std::unique_lock lock(mutex_);
    cache_.clear();
}

HomflyEvaluator& HomflyEvaluator::shared() {
    static HomflyEvaluator instance;
    return instance;
}

LaurentVZ homfly_p(const BraidWord& word) {
    LaurentVZ p = HomflyEvaluator::shared()(word);
    if (p.is_zero())
        throw InternalError("braid polynomial evaluated to zero");
    return p;
}

namespace {

LaurentVZ one_minus_v2() {
    return LaurentVZ(1) - LaurentVZ::v(2);
}

LaurentVZ h_from_p(const LaurentVZ& p, long long beta) {
    try {
        return exact_div(p.shifted(static_cast<int>(beta + 1), 1), one_minus_v2());
    } catch (const NotDivisible&) {
        throw InternalError("v^(beta+1) z P is not divisible by 1 - v^2");
    }
}

LaurentVZ conway_from_p(const LaurentVZ& p) {
    try {
        return exact_div(p.shifted(0, 1), one_minus_v2()).at_v_one();
    } catch (const NotDivisible&) {
        throw InternalError("z P is not divisible by 1 - v^2");
    }
}

} // namespace

LaurentVZ homfly_h(const BraidWord& word) {
    return h_from_p(homfly_p(word), bennequin_number(word));
}

LaurentVZ conway(const BraidWord& word) {
    return conway_from_p(homfly_p(word));
}

HomflyReport homfly_report(const BraidWord& word) {
    return homfly_report(word, homfly_p(word));
}

HomflyReport homfly_report(const BraidWord& word, const LaurentVZ& P) {
    if (P.is_zero())
        throw InternalError("braid polynomial evaluated to zero");
    HomflyReport r;
    r.P = P;
    r.beta_t = bennequin_number(word);
    r.H = h_from_p(r.P, r.beta_t);
    r.e = min_v_degree(r.H);
    r.e_P = min_v_degree(r.P);
    r.conway = conway_from_p(r.P);
    return r;
}

MfwReport mfw_check(const BraidWord& word) {
    MfwReport r;
    r.beta_t = bennequin_number(word);
    r.e = min_v_degree(h_from_p(homfly_p(word), r.beta_t));
    r.slack = r.e - (r.beta_t + 1);
    r.holds = r.slack >= 0;
    return r;
}

BennequinCertificate max_bennequin_certificate(const BraidWord& word) {
    BennequinCertificate c;
    c.p0 = eval_v0(homfly_p(word));
    c.certified = !c.p0.is_zero();
    return c;
}

TopTermReport homogeneous_top_term(const BraidWord& word) {
    const GeneratorProfile gp = generator_profile(word);
    if (!gp.homogeneous)
        throw DomainError("the top-term formula needs a homogeneous word using every generator");
    const int length = gp.pos + gp.neg;
    TopTermReport r;
    r.predicted = one_minus_v2().shifted(2 * gp.n_n, length - word.strands());
    if ((gp.neg - gp.n_n) % 2 != 0)
        r.predicted = -r.predicted;
    const LaurentVZ p = homfly_p(word);
    const int top = p.max_z();
    r.observed = p.z_slice(top).shifted(0, top);
    r.match = r.predicted == r.observed;
    return r;
}

LaurentVZ kanda_factor(int l) {
    if (l < 0)
        throw DomainError("kanda_factor needs l >= 0");
    LaurentVZ prev = LaurentVZ::z(-1); // f_0
    LaurentVZ cur;                     // f_1
    if (l == 0)
        return prev;
    for (int k = 2; k <= l; ++k) {
        LaurentVZ next = prev - cur.shifted(0, 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace braidnorm
