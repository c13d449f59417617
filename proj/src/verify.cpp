#include "braidnorm/verify.hpp"

#include "braidnorm/band3.hpp"
#include "braidnorm/bennequin.hpp"
#include "braidnorm/error.hpp"
#include "braidnorm/homfly.hpp"
#include "braidnorm/skein_oracle.hpp"

#include <algorithm>
#include <sstream>

namespace braidnorm {

namespace {

std::string describe(const BraidWord& w) {
    const std::string text = to_string(w);
    return "n=" + std::to_string(w.strands()) + " word=\"" + text + "\"";
}

void enumerate(std::vector<BraidLetter>& cur, int len, const std::vector<BraidLetter>& alphabet, int n,
               const std::function<void(const BraidWord&)>& visit) {
    if (static_cast<int>(cur.size()) == len) {
        visit(BraidWord(n, cur));
        return;
    }
    for (const auto& l : alphabet) {
        cur.push_back(l);
        enumerate(cur, len, alphabet, n, visit);
        cur.pop_back();
    }
}

int pick(const std::optional<int>& v, int fallback) {
    return v ? *v : fallback;
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw DomainError(what);
}

void check_exhaustive(int strands, int len) {
    require(strands >= 1 && strands <= max_exhaustive_strands,
            "exhaustive sweeps allow 1 to " + std::to_string(max_exhaustive_strands) + " strands");
    for (int n = 1; n <= strands; ++n)
        require(len >= 0 && len <= max_exhaustive_length(n),
                "exhaustive length ceiling on " + std::to_string(n) + " strands is " +
                    std::to_string(max_exhaustive_length(n)));
}

class Failures {
public:
    explicit Failures(SuiteResult& r) : r_(r) {}
    void expect(bool ok, const BraidWord& w, const std::string& check, const std::string& lhs,
                const std::string& rhs) {
        ++r_.checked;
        if (!ok)
            r_.failures.push_back(describe(w) + " " + check + ": lhs=" + lhs + " rhs=" + rhs);
    }
    void expect_eq(const LaurentVZ& lhs, const LaurentVZ& rhs, const BraidWord& w, const std::string& check) {
        const bool ok = lhs == rhs;
        expect(ok, w, check, ok ? "" : to_string(lhs), ok ? "" : to_string(rhs));
    }

private:
    SuiteResult& r_;
};

// Defining relations of P around one word.
void check_relations(const BraidWord& beta, Failures& f) {
    const int n = beta.strands();
    const LaurentVZ p = homfly_p(beta);
    for (int i = 1; i < n; ++i) {
        const BraidLetter s = BraidLetter::sigma(i, 1);
        const LaurentVZ lhs = homfly_p(beta.appended(s)) - homfly_p(beta.appended(s.inverse()));
        f.expect_eq(lhs, p.shifted(0, 1), beta, "skein at s" + std::to_string(i));
        const BraidWord conj = BraidWord(n, {s}) * beta * BraidWord(n, {s.inverse()});
        f.expect_eq(homfly_p(conj), p, beta, "conjugation by s" + std::to_string(i));
    }
    const BraidWord wide = beta.widened(n + 1);
    const LaurentVZ pos = homfly_p(wide.appended(BraidLetter::sigma(n, 1)));
    const LaurentVZ neg = homfly_p(wide.appended(BraidLetter::sigma(n, -1)));
    f.expect_eq(pos, p, beta, "positive stabilization");
    f.expect_eq(neg, p.shifted(2, 0), beta, "negative stabilization");
    // The negative stabilization follows from the skein relation and a free strand.
    LaurentVZ derived = pos;
    derived.add_scaled(loop_value() * p, BigInt(-1), 0, 1);
    f.expect_eq(neg, derived, beta, "stabilization consistency");
}

SuiteResult suite_skein(const VerifyLimits& lim) {
    const int strands = pick(lim.max_strands, 3);
    const int len = pick(lim.max_len, 6);
    const std::size_t samples = lim.samples.value_or(500);
    check_exhaustive(strands, len);
    const int sample_n = std::min(strands + 1, max_sampled_strands);
    require(samples <= 100000, "at most 100000 samples");

    SuiteResult r{"skein", 0, {}, {}};
    Failures f(r);
    SkeinOracle oracle(lim.budget);
    for (int n = 1; n <= strands; ++n)
        for_each_word(n, len, [&](const BraidWord& w) {
            check_relations(w, f);
            f.expect_eq(homfly_p(w), oracle(w), w, "oracle agreement");
        });
    std::mt19937_64 rng(lim.seed);
    for (std::size_t k = 0; k < samples; ++k)
        check_relations(random_word(rng, sample_n, 8), f);
    r.notes.push_back("exhaustive n<=" + std::to_string(strands) + " len<=" + std::to_string(len) + "; " +
                      std::to_string(samples) + " samples at n=" + std::to_string(sample_n) + " len<=8");
    return r;
}

SuiteResult suite_mfw(const VerifyLimits& lim) {
    const int strands = pick(lim.max_strands, 3);
    const int len = pick(lim.max_len, 8);
    check_exhaustive(strands, len);
    SuiteResult r{"mfw", 0, {}, {}};
    Failures f(r);
    long long tight = 0;
    for (int n = 1; n <= strands; ++n)
        for_each_word(n, len, [&](const BraidWord& w) {
            const MfwReport m = mfw_check(w);
            tight += m.slack == 0 ? 1 : 0;
            f.expect(m.holds, w, "beta_t + 1 <= e", std::to_string(m.beta_t + 1), std::to_string(m.e));
        });
    r.notes.push_back(std::to_string(tight) + " words with slack 0");
    return r;
}

SuiteResult suite_homogeneous(const VerifyLimits& lim) {
    const int strands = pick(lim.max_strands, 3);
    const int len = pick(lim.max_len, 8);
    check_exhaustive(strands, len);
    SuiteResult r{"homogeneous", 0, {}, {}};
    Failures f(r);
    for (int n = 1; n <= strands; ++n)
        for_each_word(n, len, [&](const BraidWord& w) {
            if (!generator_profile(w).homogeneous)
                return;
            const TopTermReport t = homogeneous_top_term(w);
            f.expect(t.match, w, "top z-term", to_string(t.predicted), to_string(t.observed));
        });
    return r;
}

// Signed crossings between L'' and the rest of L', halved.
long long half_mixed_crossings(const CablePair& cp) {
    const ClosureProfile prof = closure_profile(cp.lprime);
    std::vector<bool> in(static_cast<std::size_t>(prof.r), false);
    for (int c : cp.subset)
        in[static_cast<std::size_t>(c)] = true;
    long long s = 0;
    for (const auto& x : crossings(cp.lprime)) {
        const bool a = in[static_cast<std::size_t>(prof.comp[static_cast<std::size_t>(x.over)])];
        const bool b = in[static_cast<std::size_t>(prof.comp[static_cast<std::size_t>(x.under)])];
        if (a != b)
            s += x.sign;
    }
    if (s % 2 != 0)
        throw InternalError("odd crossing count between L'' and its complement");
    return s / 2;
}

SuiteResult suite_linearity(const VerifyLimits& lim) {
    const int strands = pick(lim.max_strands, 4);
    const int len = pick(lim.max_len, 8);
    const std::size_t samples = lim.samples.value_or(200);
    require(strands >= 1 && strands <= max_sampled_strands,
            "sampled sweeps allow 1 to " + std::to_string(max_sampled_strands) + " strands");
    require(len >= 0 && len <= 12, "linearity sweeps allow length up to 12");
    require(samples <= 100000, "at most 100000 samples");

    SuiteResult r{"linearity", 0, {}, {}};
    std::mt19937_64 rng(lim.seed);
    std::uniform_int_distribution<int> strand_dist(1, strands);
    std::uniform_int_distribution<int> class_dist(0, 4);
    for (std::size_t k = 0; k < samples; ++k) {
        const BraidWord w = random_word(rng, strand_dist(rng), len);
        const int comps = closure_profile(w).r;
        CohClass C;
        do {
            C.c.clear();
            for (int i = 0; i < comps; ++i)
                C.c.push_back(class_dist(rng));
        } while (C.is_zero());

        long long sum = 0;
        for (int i = 0; i < comps; ++i)
            sum += static_cast<long long>(C[i]) * relative_bennequin(w, i);
        const CablePair cp = cable_pair(w, C);
        const long long direct = relative_bennequin_subset(cp.lprime, cp.subset);
        const long long split = bennequin_number(cp.lprime, cp.subset) + half_mixed_crossings(cp);

        std::ostringstream cls;
        for (int i = 0; i < comps; ++i)
            cls << (i ? "," : "") << C[i];
        r.checked += 2;
        if (direct != sum)
            r.failures.push_back(describe(w) + " class=" + cls.str() + " beta_t(L'',L') vs sum C_i beta_t(L_i,L): lhs=" +
                                 std::to_string(direct) + " rhs=" + std::to_string(sum));
        if (split != sum)
            r.failures.push_back(describe(w) + " class=" + cls.str() +
                                 " beta_t(L'') + cr(L'',L'-L'')/2 vs sum: lhs=" + std::to_string(split) +
                                 " rhs=" + std::to_string(sum));
    }
    return r;
}

SuiteResult suite_morton3(const VerifyLimits& lim) {
    const int len = pick(lim.max_len, 6);
    require(len >= 0 && len <= 6, "3-strand band sweeps allow length up to 6");
    SuiteResult r{"morton3", 0, {}, {}};
    Failures f(r);
    BandMinimizer minimizer(len + 2);
    std::size_t certified = 0;
    std::size_t total = 0;
    for_each_band3_word(len, [&](const BraidWord& w) {
        ++total;
        const MortonReport m = morton_check_3braid(w, minimizer);
        if (!m.certified)
            return;
        ++certified;
        f.expect(m.holds, w, "e_P <= 2 neg_b on " + to_string(m.minimal), std::to_string(m.e_P),
                 std::to_string(2 * m.neg_b_min));
    });

    const LaurentVZ d = loop_value();
    for (const char* t : {"a1,2^-1", "a2,3^-1", "a1,3^-1"}) {
        const BraidWord w = parse_braid(t, 3);
        f.expect_eq(homfly_p(w), (d * d).shifted(2, 0), w, "length-one base case");
    }
    const LaurentVZ two = (LaurentVZ::v(2) - LaurentVZ::v(4)).shifted(0, -1);
    for (const char* a : {"a1,2", "a2,3", "a1,3"})
        for (const char* b : {"a1,2", "a2,3", "a1,3"}) {
            if (std::string(a) == b)
                continue;
            const BraidWord w = parse_braid(std::string(a) + "^-1 " + b, 3);
            f.expect_eq(homfly_p(w), two, w, "length-two base case");
        }
    r.notes.push_back(std::to_string(certified) + " of " + std::to_string(total) +
                      " words certified minimal within length bound " + std::to_string(len + 2));
    return r;
}

SuiteResult suite_kanda(const VerifyLimits& lim) {
    std::vector<int> ks = lim.k ? std::vector<int>{*lim.k} : std::vector<int>{3, 5};
    const int max_l = pick(lim.max_l, 6);
    for (int k : ks)
        require(k >= 1 && k <= 15, "k must lie in [1, 15]");
    require(max_l >= 1 && max_l <= 12, "max-l must lie in [1, 12]");

    SuiteResult r{"kanda", 0, {}, {}};
    Failures f(r);
    for (int k : ks) {
        const BraidWord torus = parse_braid("s1^" + std::to_string(k), 2);
        const LaurentVZ base = eval_v0(homfly_p(torus));
        for (int l = 1; l <= max_l; ++l) {
            const BraidWord w = parse_braid("s2^-" + std::to_string(l) + " s1^" + std::to_string(k), 3);
            const LaurentVZ p0 = eval_v0(homfly_p(w));
            const LaurentVZ fl = kanda_factor(l);
            f.expect_eq(p0, fl * base, w, "P(0,z) = f_l P(0,z)(s1^k)");
            if (l == 1)
                f.expect(p0.is_zero(), w, "P(0,z) vanishes", to_string(p0), "0");
            if (l == 2)
                f.expect_eq(p0, base.shifted(0, -1), w, "P(0,z) = P(0,z)(s1^k)/z");
            if (l >= 2) {
                const bool want_negative = l % 2 == 1;
                const bool signs_ok = !fl.is_zero() && std::all_of(fl.terms().begin(), fl.terms().end(), [&](const auto& t) {
                    return want_negative ? t.coeff < 0 : t.coeff > 0;
                });
                f.expect(signs_ok, w, std::string("f_l coefficients all ") + (want_negative ? "negative" : "positive"),
                         to_string(fl), want_negative ? "<0" : ">0");
                const BennequinCertificate c = max_bennequin_certificate(w);
                f.expect(c.certified, w, "maximal Bennequin certificate", to_string(c.p0), "nonzero");
                const long long beta = bennequin_number(w);
                const long long chi_minus = seifert_euler(w).chi_minus;
                r.notes.push_back("k=" + std::to_string(k) + " l=" + std::to_string(l) + " max beta_t=" +
                                  std::to_string(beta) + " -chi=" + std::to_string(chi_minus) +
                                  " gap=" + std::to_string(chi_minus - beta));
            }
        }
    }
    return r;
}

} // namespace

void for_each_word(int n, int max_len, const std::function<void(const BraidWord&)>& visit) {
    std::vector<BraidLetter> alphabet;
    for (int i = 1; i < n; ++i) {
        alphabet.push_back(BraidLetter::sigma(i, 1));
        alphabet.push_back(BraidLetter::sigma(i, -1));
    }
    std::vector<BraidLetter> cur;
    for (int len = 0; len <= max_len; ++len) {
        if (len > 0 && alphabet.empty())
            break;
        enumerate(cur, len, alphabet, n, visit);
    }
}

void for_each_band3_word(int max_len, const std::function<void(const BraidWord&)>& visit) {
    std::vector<BraidLetter> alphabet;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
        alphabet.push_back(BraidLetter::band(i, j, 1));
        alphabet.push_back(BraidLetter::band(i, j, -1));
    }
    std::vector<BraidLetter> cur;
    for (int len = 0; len <= max_len; ++len)
        enumerate(cur, len, alphabet, 3, visit);
}

BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    const int len = n > 1 ? len_dist(rng) : 0;
    std::uniform_int_distribution<int> gen(1, std::max(n - 1, 1));
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<BraidLetter> letters;
    for (int k = 0; k < len; ++k)
        letters.push_back(BraidLetter::sigma(gen(rng), sign(rng) ? 1 : -1));
    return BraidWord(n, std::move(letters));
}

int max_exhaustive_length(int n) {
    return n <= 3 ? 8 : 6;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"skein", "mfw", "homogeneous", "linearity", "morton3", "kanda"};
    return names;
}

SuiteResult run_suite(const std::string& suite, const VerifyLimits& limits) {
    SuiteResult r;
    if (suite == "skein")
        r = suite_skein(limits);
    else if (suite == "mfw")
        r = suite_mfw(limits);
    else if (suite == "homogeneous")
        r = suite_homogeneous(limits);
    else if (suite == "linearity")
        r = suite_linearity(limits);
    else if (suite == "morton3")
        r = suite_morton3(limits);
    else if (suite == "kanda")
        r = suite_kanda(limits);
    else
        throw DomainError("unknown suite '" + suite + "'");
    std::sort(r.failures.begin(), r.failures.end());
    return r;
}

} // namespace braidnorm
