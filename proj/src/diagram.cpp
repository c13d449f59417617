#include "braidnorm/diagram.hpp"

#include "braidnorm/error.hpp"

#include <algorithm>
#include <numeric>

namespace braidnorm {

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

// Euler characteristic of disks joined by bands, with punctures; pieces are
// the connected components of the disk/band graph.
EulerReport surface_report(std::size_t disks, const std::vector<std::pair<int, int>>& bands,
                           const std::vector<int>& punctures_on, const std::vector<bool>& used,
                           SurfaceKind kind) {
    DisjointSets ds(disks);
    for (auto [a, b] : bands)
        ds.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    std::vector<long long> piece_chi(disks, 0);
    for (std::size_t d = 0; d < disks; ++d)
        if (used[d])
            piece_chi[ds.find(d)] += 1;
    for (auto [a, b] : bands)
        piece_chi[ds.find(static_cast<std::size_t>(a))] -= 1;
    for (int d : punctures_on)
        piece_chi[ds.find(static_cast<std::size_t>(d))] -= 1;
    EulerReport rep;
    rep.kind = kind;
    for (std::size_t d = 0; d < disks; ++d) {
        if (!used[d] || ds.find(d) != d)
            continue;
        rep.chi += piece_chi[d];
        rep.chi_minus += std::max(-piece_chi[d], 0LL);
    }
    return rep;
}

} // namespace

std::vector<Crossing> crossings(const BraidWord& word) {
    const BraidWord std_word = band_to_standard(word);
    std::vector<int> at(static_cast<std::size_t>(word.strands()));
    std::iota(at.begin(), at.end(), 0);
    std::vector<Crossing> out;
    out.reserve(std_word.length());
    for (const auto& l : std_word.letters()) {
        auto& left = at[static_cast<std::size_t>(l.i - 1)];
        auto& right = at[static_cast<std::size_t>(l.i)];
        if (l.positive())
            out.push_back({left, right, 1});
        else
            out.push_back({right, left, -1});
        std::swap(left, right);
    }
    return out;
}

ClosureProfile closure_profile(const BraidWord& word) {
    ClosureProfile p;
    const auto cyc = cycles(permutation(word));
    p.r = static_cast<int>(cyc.size());
    p.comp.assign(static_cast<std::size_t>(word.strands()), 0);
    p.strands.resize(cyc.size());
    for (std::size_t c = 0; c < cyc.size(); ++c) {
        p.strands[c] = cyc[c];
        std::sort(p.strands[c].begin(), p.strands[c].end());
        for (int s : cyc[c])
            p.comp[static_cast<std::size_t>(s)] = static_cast<int>(c);
    }
    const auto r = static_cast<std::size_t>(p.r);
    p.cr.assign(r, std::vector<int>(r, 0));
    p.l_u.assign(r, 0);
    p.u.assign(r, 0);
    p.n_i.assign(r, 0);
    for (std::size_t c = 0; c < r; ++c)
        p.n_i[c] = static_cast<int>(cyc[c].size());
    for (const auto& x : crossings(word)) {
        const auto co = static_cast<std::size_t>(p.comp[static_cast<std::size_t>(x.over)]);
        const auto cu = static_cast<std::size_t>(p.comp[static_cast<std::size_t>(x.under)]);
        if (co == cu) {
            p.cr[co][co] += x.sign;
            p.l_u[co] += 1;
        } else {
            p.cr[co][cu] += x.sign;
            p.cr[cu][co] += x.sign;
            p.u[co] += 1;
        }
    }
    return p;
}

std::vector<std::vector<int>> linking_matrix(const ClosureProfile& profile) {
    const auto r = static_cast<std::size_t>(profile.r);
    std::vector<std::vector<int>> lk(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j)
                continue;
            if (profile.cr[i][j] % 2 != 0)
                throw InternalError("odd crossing count between components " + std::to_string(i) +
                                    " and " + std::to_string(j));
            lk[i][j] = profile.cr[i][j] / 2;
        }
    return lk;
}

EulerReport seifert_euler(const BraidWord& word) {
    const auto n = static_cast<std::size_t>(word.strands());
    std::vector<std::pair<int, int>> bands;
    for (const BraidWord expanded = band_to_standard(word); const auto& l : expanded.letters())
        bands.emplace_back(l.i - 1, l.i);
    return surface_report(n, bands, {}, std::vector<bool>(n, true), SurfaceKind::seifert);
}

EulerReport band_seifert_euler(const BraidWord& word) {
    const auto n = static_cast<std::size_t>(word.strands());
    std::vector<std::pair<int, int>> bands;
    for (const auto& l : word.letters())
        bands.emplace_back(l.i - 1, l.j - 1);
    return surface_report(n, bands, {}, std::vector<bool>(n, true), SurfaceKind::band_seifert);
}

EulerReport sublink_euler(const BraidWord& word, const std::vector<bool>& in_sublink) {
    const ClosureProfile prof = closure_profile(word);
    if (static_cast<int>(in_sublink.size()) != prof.r)
        throw DomainError("sublink mask has " + std::to_string(in_sublink.size()) +
                          " entries for " + std::to_string(prof.r) + " components");
    const auto n = static_cast<std::size_t>(word.strands());
    auto member = [&](int strand) {
        return in_sublink[static_cast<std::size_t>(prof.comp[static_cast<std::size_t>(strand)])];
    };
    std::size_t disks = 0;
    for (std::size_t s = 0; s < n; ++s)
        disks += member(static_cast<int>(s)) ? 1 : 0;

    // Seifert circles of the sublink are its strand levels once the other
    // components are deleted; a level is the count of sublink strands to the left.
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    auto level = [&](std::size_t pos) {
        int q = 0;
        for (std::size_t p = 0; p < pos; ++p)
            q += member(at[p]) ? 1 : 0;
        return q;
    };
    std::vector<std::pair<int, int>> bands;
    std::vector<int> punctures;
    for (const BraidWord expanded = band_to_standard(word); const auto& l : expanded.letters()) {
        const auto k = static_cast<std::size_t>(l.i - 1);
        const bool left = member(at[k]);
        const bool right = member(at[k + 1]);
        if (left && right) {
            const int q = level(k);
            bands.emplace_back(q, q + 1);
        } else if (left != right) {
            const bool sublink_over = l.positive() ? left : right;
            if (sublink_over)
                punctures.push_back(level(k));
        }
        std::swap(at[k], at[k + 1]);
    }
    return surface_report(disks, bands, punctures, std::vector<bool>(disks, true),
                          SurfaceKind::punctured_component);
}

EulerReport punctured_component_euler(const BraidWord& word, int j) {
    const ClosureProfile prof = closure_profile(word);
    if (j < 0 || j >= prof.r)
        throw DomainError("component id " + std::to_string(j) + " out of range (r = " +
                          std::to_string(prof.r) + ")");
    const auto c = static_cast<std::size_t>(j);
    EulerReport rep;
    rep.kind = SurfaceKind::punctured_component;
    rep.chi = static_cast<long long>(prof.n_i[c]) - prof.u[c] - prof.l_u[c];
    rep.chi_minus = std::max(-rep.chi, 0LL);
    return rep;
}

const char* to_string(SurfaceKind kind) noexcept {
    switch (kind) {
    case SurfaceKind::seifert:
        return "seifert";
    case SurfaceKind::band_seifert:
        return "band_seifert";
    case SurfaceKind::punctured_component:
        return "punctured_component";
    }
    return "?";
}

} // namespace braidnorm
