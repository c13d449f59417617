#include "braidnorm/skein_oracle.hpp"

#include "braidnorm/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace braidnorm {

namespace {

using Word = std::vector<int>;

Word least_rotation(const Word& w) {
    Word best = w;
    Word r = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best)
            best = r;
    }
    return best;
}

// w[k+1..] followed by w[..k): the conjugate with letter k moved to the end, dropped.
Word rotate_out(const Word& w, std::size_t k) {
    Word out(w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

// Positive braid moves: far commutation and a b a -> b a b.
void for_each_move(const Word& w, const std::function<void(Word)>& f) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const int d = std::abs(w[i] - w[i + 1]);
        if (d >= 2) {
            Word x = w;
            std::swap(x[i], x[i + 1]);
            f(std::move(x));
        } else if (d == 1 && i + 2 < w.size() && w[i] == w[i + 2]) {
            Word x = w;
            x[i] = x[i + 2] = w[i + 1];
            x[i + 1] = w[i];
            f(std::move(x));
        }
    }
}

} // namespace

void SkeinOracle::charge(std::size_t units) {
    spent_ += units;
    if (spent_ > budget_)
        throw BudgetExceeded("skein oracle budget of " + std::to_string(budget_) + " units exhausted");
}

LaurentVZ SkeinOracle::operator()(const BraidWord& word) {
    spent_ = 0;
    Word w;
    for (const BraidWord expanded = band_to_standard(word); const auto& l : expanded.letters())
        w.push_back(l.sign * l.i);
    return eval(word.strands(), std::move(w));
}

LaurentVZ SkeinOracle::eval(int n, Word w) {
    charge(1);
    if (w.empty())
        return loop_value().pow(n);
    auto key = std::make_pair(n, least_rotation(w));
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    LaurentVZ result;
    const auto neg = std::find_if(w.begin(), w.end(), [](int x) { return x < 0; });
    if (neg != w.end()) {
        // P(b s^-1) = P(b s) - z P(b)
        Word beta = rotate_out(w, static_cast<std::size_t>(neg - w.begin()));
        Word flipped = beta;
        flipped.push_back(-*neg);
        result = eval(n, std::move(flipped));
        result.add_scaled(eval(n, std::move(beta)), BigInt(-1), 0, 1);
    } else {
        result = eval_positive(n, w);
    }
    memo_.emplace(std::move(key), result);
    return result;
}

LaurentVZ SkeinOracle::eval_positive(int n, const Word& w) {
    const int top = n - 1;
    const auto tops = std::count(w.begin(), w.end(), top);
    if (tops == 0)
        return loop_value() * eval(n - 1, w);
    if (tops == 1)
        return eval(n - 1, rotate_out(w, static_cast<std::size_t>(std::find(w.begin(), w.end(), top) - w.begin())));

    // Look for the first letter that shortens the permutation of the prefix.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t m = w.size();
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto g = static_cast<std::size_t>(w[k] - 1);
        if (perm[g] > perm[g + 1]) {
            m = k;
            break;
        }
        std::swap(perm[g], perm[g + 1]);
    }

    std::set<Word> seen;
    std::deque<Word> queue;
    auto search = [&](Word start, const std::function<bool(const Word&)>& goal) -> Word {
        seen.clear();
        queue.clear();
        seen.insert(start);
        queue.push_back(std::move(start));
        while (!queue.empty()) {
            Word cur = std::move(queue.front());
            queue.pop_front();
            charge(1);
            if (goal(cur))
                return cur;
            for_each_move(cur, [&](Word x) {
                if (seen.insert(x).second)
                    queue.push_back(std::move(x));
            });
        }
        throw InternalError("braid-move search exhausted without reaching its goal");
    };

    if (m < w.size()) {
        // The reduced prefix has a reduced word ending in s = w[m]; then
        // P(a s s c) = P(a c) + z P(a s c).
        const int s = w[m];
        Word prefix = search(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m)),
                             [s](const Word& x) { return !x.empty() && x.back() == s; });
        prefix.pop_back();
        const Word rest(w.begin() + static_cast<std::ptrdiff_t>(m) + 1, w.end());
        Word without = prefix;
        without.insert(without.end(), rest.begin(), rest.end());
        Word once = prefix;
        once.push_back(s);
        once.insert(once.end(), rest.begin(), rest.end());
        LaurentVZ result = eval(n, std::move(without));
        result.add_scaled(eval(n, std::move(once)), BigInt(1), 0, 1);
        return result;
    }

    // Reduced: some reduced word of the same permutation uses s_{n-1} once.
    const Word single = search(w, [top](const Word& x) { return std::count(x.begin(), x.end(), top) == 1; });
    return eval(n, single);
}

} // namespace braidnorm
