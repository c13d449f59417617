#include "braidnorm/band3.hpp"

#include "braidnorm/error.hpp"
#include "braidnorm/homfly.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_set>

namespace braidnorm {

namespace {

// Letter codes: 0 = a12, 1 = a23, 2 = a13, plus 3 for the inverse.
using Code = std::uint8_t;
using Codes = std::vector<Code>;

constexpr Code inv(Code x) { return static_cast<Code>((x + 3) % 6); }

constexpr std::array<std::array<std::array<Code, 2>, 3>, 2> relation_pairs{{
    {{{0, 2}, {1, 0}, {2, 1}}}, // a12 a13 = a23 a12 = a13 a23
    {{{5, 3}, {3, 4}, {4, 5}}}, // inverses of the above
}};

constexpr int max_packed_length = 19;

std::uint64_t pack(const Codes& w) {
    std::uint64_t key = w.size();
    for (std::size_t k = 0; k < w.size(); ++k)
        key |= static_cast<std::uint64_t>(w[k]) << (5 + 3 * k);
    return key;
}

Codes unpack(std::uint64_t key) {
    Codes w(key & 31u);
    for (std::size_t k = 0; k < w.size(); ++k)
        w[k] = static_cast<Code>((key >> (5 + 3 * k)) & 7u);
    return w;
}

std::uint64_t canonical(const Codes& w) {
    Codes best = w;
    Codes r = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best)
            best = r;
    }
    return pack(best);
}

// Shorter first, then lexicographic on the letters.
bool better(std::uint64_t a, std::uint64_t b) {
    const auto la = a & 31u;
    const auto lb = b & 31u;
    if (la != lb)
        return la < lb;
    return unpack(a) < unpack(b);
}

template <class F>
void for_each_neighbour(const Codes& w, int bound, F&& f) {
    const std::size_t len = w.size();
    if (len == 0) {
        for (Code x = 0; x < 6 && bound >= 2; ++x)
            f(canonical({x, inv(x)}));
        return;
    }
    Codes r = w;
    for (std::size_t rot = 0; rot < len; ++rot) {
        if (rot > 0)
            std::rotate(r.begin(), r.begin() + 1, r.end());
        if (len >= 2) {
            if (r[1] == inv(r[0]))
                f(canonical(Codes(r.begin() + 2, r.end())));
            for (const auto& group : relation_pairs) {
                const bool hit = std::any_of(group.begin(), group.end(),
                                             [&](const auto& p) { return p[0] == r[0] && p[1] == r[1]; });
                if (!hit)
                    continue;
                for (const auto& p : group) {
                    if (p[0] == r[0] && p[1] == r[1])
                        continue;
                    Codes x = r;
                    x[0] = p[0];
                    x[1] = p[1];
                    f(canonical(x));
                }
            }
        }
        if (static_cast<int>(len) + 2 <= bound)
            for (Code c = 0; c < 6; ++c) {
                Codes x{c, inv(c)};
                x.insert(x.end(), r.begin(), r.end());
                f(canonical(x));
            }
    }
}

Codes to_codes(const BraidWord& word) {
    if (word.strands() != 3)
        throw DomainError("band minimization works on 3-strand words, got " +
                          std::to_string(word.strands()) + " strands");
    Codes out;
    for (const auto& l : word.letters()) {
        Code c = 0;
        if (l.i == 1 && l.j == 2)
            c = 0;
        else if (l.i == 2 && l.j == 3)
            c = 1;
        else
            c = 2;
        out.push_back(l.positive() ? c : inv(c));
    }
    return out;
}

BraidWord from_codes(const Codes& w) {
    std::vector<BraidLetter> letters;
    for (Code x : w) {
        const int sign = x < 3 ? 1 : -1;
        switch (x % 3) {
        case 0:
            letters.push_back(BraidLetter::band(1, 2, sign));
            break;
        case 1:
            letters.push_back(BraidLetter::band(2, 3, sign));
            break;
        default:
            letters.push_back(BraidLetter::band(1, 3, sign));
        }
    }
    return BraidWord(3, std::move(letters));
}

struct Search {
    std::vector<std::uint64_t> visited;
    std::uint64_t best = 0;
    bool complete = false;
};

Search explore(std::uint64_t start, int bound, std::size_t max_states) {
    if (bound > max_packed_length)
        throw DomainError("band word length bound " + std::to_string(bound) + " exceeds " +
                          std::to_string(max_packed_length));
    Search s;
    std::unordered_set<std::uint64_t> seen{start};
    std::deque<std::uint64_t> queue{start};
    s.best = start;
    while (!queue.empty()) {
        if (s.visited.size() >= max_states)
            return s;
        const std::uint64_t cur = queue.front();
        queue.pop_front();
        s.visited.push_back(cur);
        if (better(cur, s.best))
            s.best = cur;
        for_each_neighbour(unpack(cur), bound, [&](std::uint64_t next) {
            if (seen.insert(next).second)
                queue.push_back(next);
        });
    }
    s.complete = true;
    return s;
}

} // namespace

BandMinimum band_minimize(const BraidWord& word, std::size_t max_states) {
    const Codes w = to_codes(word);
    const Search s = explore(canonical(w), static_cast<int>(w.size()) + 2, max_states);
    return {from_codes(unpack(s.best)), s.complete, s.visited.size()};
}

BandMinimizer::BandMinimizer(int length_bound, std::size_t max_states)
    : bound_(length_bound), max_states_(max_states) {
    if (length_bound < 0 || length_bound > max_packed_length)
        throw DomainError("band word length bound must lie in [0, " +
                          std::to_string(max_packed_length) + "]");
}

BandMinimum BandMinimizer::minimize(const BraidWord& word) {
    const Codes w = to_codes(word);
    if (static_cast<int>(w.size()) > bound_)
        return band_minimize(word, max_states_);
    const std::uint64_t start = canonical(w);
    if (auto it = label_.find(start); it != label_.end()) {
        const Component& c = components_[it->second];
        return {from_codes(unpack(c.best)), true, c.states};
    }
    const Search s = explore(start, bound_, max_states_);
    if (s.complete) {
        const std::size_t id = components_.size();
        components_.push_back({s.best, s.visited.size()});
        for (std::uint64_t k : s.visited)
            label_.emplace(k, id);
    }
    return {from_codes(unpack(s.best)), s.complete, s.visited.size()};
}

namespace {

MortonReport morton_from(const BandMinimum& m) {
    MortonReport r;
    r.minimal = m.word;
    r.certified = m.certified;
    r.e_P = min_v_degree(homfly_p(m.word));
    r.neg_b_min = static_cast<int>(
        std::count_if(m.word.letters().begin(), m.word.letters().end(), [](const BraidLetter& l) { return !l.positive(); }));
    r.holds = r.e_P <= 2 * r.neg_b_min;
    return r;
}

} // namespace

MortonReport morton_check_3braid(const BraidWord& word, std::size_t max_states) {
    return morton_from(band_minimize(word, max_states));
}

MortonReport morton_check_3braid(const BraidWord& word, BandMinimizer& minimizer) {
    return morton_from(minimizer.minimize(word));
}

} // namespace braidnorm
