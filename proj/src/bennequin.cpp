#include "braidnorm/bennequin.hpp"

#include "braidnorm/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace braidnorm {

namespace {

void check_component(const ClosureProfile& prof, int i) {
    if (i < 0 || i >= prof.r)
        throw DomainError("component id " + std::to_string(i) + " out of range (r = " +
                          std::to_string(prof.r) + ")");
}

void check_class(const ClosureProfile& prof, const CohClass& C) {
    if (C.size() != prof.r)
        throw DomainError("class has " + std::to_string(C.size()) + " entries but the closure has " +
                          std::to_string(prof.r) + " components");
    for (int x : C.c)
        if (x < 0)
            throw DomainError("class entries must be >= 0; reorient the negative components and "
                              "supply a re-braided word for the reoriented link");
}

// sum_j C_j lk(L_i, L_j)
long long weighted_linking(const std::vector<std::vector<int>>& lk, const CohClass& C, std::size_t i) {
    long long s = 0;
    for (std::size_t j = 0; j < lk.size(); ++j)
        if (j != i)
            s += static_cast<long long>(C.c[j]) * lk[i][j];
    return s;
}

} // namespace

bool CohClass::is_zero() const noexcept {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

CohClass parse_class(std::string_view text) {
    CohClass out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - pos);
        while (!field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw ParseError("bad class entry '" + std::string(field) + "' in '" + std::string(text) + "'");
        out.c.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

long long bennequin_number(const BraidWord& word, const std::optional<std::vector<int>>& subset) {
    if (!subset) {
        long long writhe = 0;
        for (const BraidWord expanded = band_to_standard(word); const auto& l : expanded.letters())
            writhe += l.sign;
        return writhe - word.strands();
    }
    const ClosureProfile prof = closure_profile(word);
    std::vector<bool> in(static_cast<std::size_t>(prof.r), false);
    for (int i : *subset) {
        check_component(prof, i);
        in[static_cast<std::size_t>(i)] = true;
    }
    auto member = [&](int strand) { return in[static_cast<std::size_t>(prof.comp[static_cast<std::size_t>(strand)])]; };
    long long writhe = 0;
    for (const auto& x : crossings(word))
        if (member(x.over) && member(x.under))
            writhe += x.sign;
    long long strands = 0;
    for (int s = 0; s < word.strands(); ++s)
        strands += member(s) ? 1 : 0;
    return writhe - strands;
}

long long relative_bennequin(const ClosureProfile& prof, int i) {
    check_component(prof, i);
    const auto lk = linking_matrix(prof);
    const auto c = static_cast<std::size_t>(i);
    long long b = static_cast<long long>(prof.cr[c][c]) - prof.n_i[c];
    for (std::size_t j = 0; j < lk.size(); ++j)
        if (j != c)
            b += lk[c][j];
    return b;
}

long long relative_bennequin(const BraidWord& word, int i) {
    return relative_bennequin(closure_profile(word), i);
}

long long relative_bennequin_subset(const BraidWord& word, const std::vector<int>& subset) {
    const ClosureProfile prof = closure_profile(word);
    std::vector<int> seen;
    long long s = 0;
    for (int i : subset) {
        check_component(prof, i);
        if (std::find(seen.begin(), seen.end(), i) != seen.end())
            throw DomainError("component id " + std::to_string(i) + " repeated in subset");
        seen.push_back(i);
        s += relative_bennequin(prof, i);
    }
    return s;
}

CablePair cable_pair(const BraidWord& word, const CohClass& C) {
    const ClosureProfile prof = closure_profile(word);
    check_class(prof, C);
    if (C.is_zero())
        throw DomainError("cabling needs a nonzero class");
    const auto lk = linking_matrix(prof);
    const auto r = static_cast<std::size_t>(prof.r);
    const int n = word.strands();

    CablePair out;
    out.p.resize(r);
    out.q = C.c;
    out.m.assign(r, -1);
    out.twist.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        out.p[i] = -weighted_linking(lk, C, i);
        out.twist[i] = out.p[i] - static_cast<long long>(C.c[i]) * prof.cr[i][i];
    }

    // Every strand becomes C_i parallel strands (one if C_i = 0).
    auto mult = [&](int strand) {
        const int c = C.c[static_cast<std::size_t>(prof.comp[static_cast<std::size_t>(strand)])];
        return std::max(c, 1);
    };
    std::vector<int> at(static_cast<std::size_t>(n));
    std::iota(at.begin(), at.end(), 0);
    std::vector<BraidLetter> letters;
    auto offset = [&](std::size_t pos) {
        int o = 0;
        for (std::size_t k = 0; k < pos; ++k)
            o += mult(at[k]);
        return o;
    };
    for (const BraidWord expanded = band_to_standard(word); const auto& l : expanded.letters()) {
        const auto k = static_cast<std::size_t>(l.i - 1);
        const int o = offset(k);
        const int a = mult(at[k]);
        const int b = mult(at[k + 1]);
        // Move the a-block right across the b-block, last strand first; every
        // crossing keeps the sign, so the a-block stays over (or under) throughout.
        for (int s = a; s >= 1; --s)
            for (int t = 0; t < b; ++t)
                letters.push_back(BraidLetter::sigma(o + s + t, l.sign));
        std::swap(at[k], at[k + 1]);
    }
    int total = 0;
    for (int s = 0; s < n; ++s)
        total += mult(s);

    // Twist at the bottom of the cable of each component's first strand.
    const Permutation perm = permutation(word);
    for (std::size_t i = 0; i < r; ++i) {
        if (C.c[i] == 0)
            continue;
        const int first = prof.strands[i].front();
        const auto bottom = static_cast<std::size_t>(perm[static_cast<std::size_t>(first)]);
        out.m[i] = offset(bottom);
        if (C.c[i] < 2 || out.twist[i] == 0)
            continue;
        const long long e = out.twist[i];
        const int sign = e > 0 ? 1 : -1;
        for (long long rep = 0; rep < (e > 0 ? e : -e); ++rep) {
            if (sign > 0)
                for (int g = out.m[i] + 1; g <= out.m[i] + C.c[i] - 1; ++g)
                    letters.push_back(BraidLetter::sigma(g, 1));
            else
                for (int g = out.m[i] + C.c[i] - 1; g >= out.m[i] + 1; --g)
                    letters.push_back(BraidLetter::sigma(g, -1));
        }
    }
    out.lprime = BraidWord(total, std::move(letters));

    // Top positions of the cable strands: strand s occupies a block at its top offset.
    out.strand_origin.assign(static_cast<std::size_t>(total), 0);
    {
        int o = 0;
        for (int s = 0; s < n; ++s)
            for (int c = 0; c < mult(s); ++c)
                out.strand_origin[static_cast<std::size_t>(o++)] = s;
    }
    const ClosureProfile cprof = closure_profile(out.lprime);
    out.origin.resize(static_cast<std::size_t>(cprof.r));
    for (int a = 0; a < cprof.r; ++a) {
        const int s = cprof.strands[static_cast<std::size_t>(a)].front();
        const int orig = prof.comp[static_cast<std::size_t>(out.strand_origin[static_cast<std::size_t>(s)])];
        out.origin[static_cast<std::size_t>(a)] = orig;
        if (C.c[static_cast<std::size_t>(orig)] > 0)
            out.subset.push_back(a);
    }
    return out;
}

long long class_lower_bound(const BraidWord& word, const CohClass& C) {
    const ClosureProfile prof = closure_profile(word);
    check_class(prof, C);
    long long s = 0;
    for (int i = 0; i < prof.r; ++i)
        if (C[i] != 0)
            s += static_cast<long long>(C[i]) * relative_bennequin(prof, i);
    return s;
}

long long scholium_lower_bound(const BraidWord& word, const CohClass& C) {
    const ClosureProfile prof = closure_profile(word);
    check_class(prof, C);
    if (C.is_zero())
        return 0;
    const auto lk = linking_matrix(prof);
    const CablePair cp = cable_pair(word, C);
    long long b = bennequin_number(cp.lprime, cp.subset);
    for (std::size_t i = 0; i < lk.size(); ++i)
        if (C.c[i] == 0) {
            const long long w = weighted_linking(lk, C, i);
            b += w < 0 ? -w : w;
        }
    return b;
}

NormBracket thurston_bracket(const BraidWord& word, const CohClass& C) {
    const ClosureProfile prof = closure_profile(word);
    check_class(prof, C);
    const auto r = static_cast<std::size_t>(prof.r);

    std::vector<long long> unit(r);
    for (std::size_t j = 0; j < r; ++j) {
        const long long chi = static_cast<long long>(prof.n_i[j]) - prof.u[j] - prof.l_u[j];
        if (chi == 1 && C.c[j] > 0)
            throw DomainError("component " + std::to_string(j) +
                              " bounds an unpierced disk in this diagram (unlinked unknotted "
                              "component); the norm bracket needs no such components");
        unit[j] = -chi;
    }

    NormBracket br;
    br.corollary = class_lower_bound(word, C);
    br.scholium = scholium_lower_bound(word, C);
    br.lower = br.corollary;
    br.lower_source = LowerSource::corollary;
    if (br.scholium > br.lower) {
        br.lower = br.scholium;
        br.lower_source = LowerSource::scholium;
    }

    // Subadditivity over the layers 1[C >= t].
    const int top = C.c.empty() ? 0 : *std::max_element(C.c.begin(), C.c.end());
    const bool all_ones_word_has_bands = !word.is_standard();
    bool surface_won = false;
    long long upper = 0;
    for (int t = 1; t <= top; ++t) {
        std::vector<bool> layer(r);
        long long unit_sum = 0;
        bool full = true;
        for (std::size_t j = 0; j < r; ++j) {
            layer[j] = C.c[j] >= t;
            full = full && layer[j];
            if (layer[j])
                unit_sum += unit[j];
        }
        long long best = unit_sum;
        bool won = false;
        const long long sub = sublink_euler(word, layer).chi_minus;
        if (sub <= best) {
            best = sub;
            won = true;
        }
        if (full && all_ones_word_has_bands) {
            const long long band = band_seifert_euler(word).chi_minus;
            if (band <= best) {
                best = band;
                won = true;
            }
        }
        surface_won = won;
        upper += best;
    }
    br.upper = upper;
    br.upper_source = (top == 1 && surface_won) ? UpperSource::generalized_seifert
                                                : UpperSource::seminorm_sum;

    // Seifert's surface of a homogeneous closed braid is a fibre, hence norm
    // minimizing, and the norm is additive on C >= 0 with unit values -chi_j.
    const GeneratorProfile gp = generator_profile(word);
    if (gp.homogeneous && word.is_standard()) {
        long long additive = 0;
        for (std::size_t j = 0; j < r; ++j)
            additive += static_cast<long long>(C.c[j]) * unit[j];
        if (additive > br.lower) {
            br.lower = additive;
            br.lower_source = LowerSource::direct;
        }
    }
    if (br.lower > br.upper)
        throw InternalError("norm bracket inverted: lower " + std::to_string(br.lower) + " > upper " +
                            std::to_string(br.upper));
    br.determined = br.lower == br.upper;
    return br;
}

McMullenReport mcmullen_check(const MultiPoly& poly, const NormBracket& bracket, const CohClass& C, int r) {
    if (r < 1)
        throw DomainError("component count must be at least 1");
    if (C.size() != r || poly.variables() != r)
        throw DomainError("dimension mismatch: " + std::to_string(r) + " components, class of length " +
                          std::to_string(C.size()) + ", polynomial in " + std::to_string(poly.variables()) +
                          " variables");
    McMullenReport rep;
    rep.alexander = alexander_norm(poly, C.c);
    rep.bound = bracket.upper + (r == 1 ? 1 : 0);
    rep.holds = rep.alexander <= BigInt(static_cast<long>(rep.bound));
    if (bracket.determined) {
        rep.has_gap = true;
        rep.gap = BigInt(static_cast<long>(bracket.upper)) - rep.alexander;
    }
    return rep;
}

const char* to_string(LowerSource s) noexcept {
    switch (s) {
    case LowerSource::corollary:
        return "corollary";
    case LowerSource::scholium:
        return "scholium";
    case LowerSource::direct:
        return "direct";
    }
    return "?";
}

const char* to_string(UpperSource s) noexcept {
    switch (s) {
    case UpperSource::generalized_seifert:
        return "generalized_seifert";
    case UpperSource::seminorm_sum:
        return "seminorm_sum";
    }
    return "?";
}

} // namespace braidnorm
