#include "braidnorm/braid.hpp"

#include "braidnorm/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace braidnorm {

namespace {

void check_letter(const BraidLetter& l, int n) {
    if (l.sign != 1 && l.sign != -1)
        throw DomainError("braid letter sign must be +1 or -1");
    if (l.kind == BraidLetter::Kind::standard) {
        if (l.i < 1 || l.i > n - 1 || l.j != l.i + 1)
            throw DomainError("standard generator s" + std::to_string(l.i) +
                              " out of range for " + std::to_string(n) + " strands");
    } else {
        if (l.i >= l.j)
            throw DomainError("band generator a" + std::to_string(l.i) + "," +
                              std::to_string(l.j) + " needs i < j");
        if (l.i < 1 || l.j > n)
            throw DomainError("band generator a" + std::to_string(l.i) + "," +
                              std::to_string(l.j) + " out of range for " +
                              std::to_string(n) + " strands");
    }
}

// Reads a (possibly signed) decimal integer at the front of `s`.
bool take_int(std::string_view& s, long long& out, bool allow_sign) {
    if (s.empty())
        return false;
    if (!allow_sign && (s.front() == '-' || s.front() == '+'))
        return false;
    std::string_view body = s;
    bool plus = false;
    if (body.front() == '+') {
        plus = true;
        body.remove_prefix(1);
    }
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), out);
    if (ec != std::errc{} || ptr == body.data())
        return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - body.data()) + (plus ? 1 : 0));
    return true;
}

} // namespace

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 1)
        throw DomainError("strand count must be at least 1");
    for (const auto& l : letters_)
        check_letter(l, n_);
}

bool BraidWord::is_standard() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const BraidLetter& l) { return l.span() == 1; });
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back(it->inverse());
    return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (rhs.n_ != n_)
        throw DomainError("cannot concatenate braids on different strand counts");
    std::vector<BraidLetter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::widened(int n) const {
    if (n < n_)
        throw DomainError("cannot narrow a braid word");
    return BraidWord(n, letters_);
}

BraidWord BraidWord::appended(BraidLetter letter) const {
    std::vector<BraidLetter> out = letters_;
    out.push_back(letter);
    return BraidWord(std::max(n_, letter.j), std::move(out));
}

BraidWord parse_braid(std::string_view text, int n) {
    if (n < 1)
        throw ParseError("strand count must be at least 1");
    std::vector<BraidLetter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        const std::string_view token = text.substr(pos, end - pos);
        pos = end;

        auto bad = [&](const std::string& why) {
            return ParseError("malformed braid token '" + std::string(token) + "': " + why);
        };
        std::string_view rest = token;
        const char head = rest.front();
        rest.remove_prefix(1);
        long long i = 0;
        long long j = 0;
        if (!take_int(rest, i, false))
            throw bad("expected a strand index");
        BraidLetter letter;
        if (head == 's') {
            if (i < 1 || i > n - 1)
                throw ParseError("index out of range: s" + std::to_string(i) + " on " +
                                 std::to_string(n) + " strands");
            letter = BraidLetter::sigma(static_cast<int>(i));
        } else if (head == 'a') {
            if (rest.empty() || rest.front() != ',')
                throw bad("band generator needs 'a<i>,<j>'");
            rest.remove_prefix(1);
            if (!take_int(rest, j, false))
                throw bad("expected a second strand index");
            if (i >= j)
                throw ParseError("band token '" + std::string(token) + "' needs i < j");
            if (i < 1 || j > n)
                throw ParseError("index out of range: a" + std::to_string(i) + "," +
                                 std::to_string(j) + " on " + std::to_string(n) + " strands");
            letter = BraidLetter::band(static_cast<int>(i), static_cast<int>(j));
        } else {
            throw bad("expected 's' or 'a'");
        }
        long long k = 1;
        if (!rest.empty()) {
            if (rest.front() != '^')
                throw bad("unexpected trailing characters");
            rest.remove_prefix(1);
            if (!take_int(rest, k, true) || !rest.empty())
                throw bad("exponent must be an integer");
            if (k > std::numeric_limits<int>::max() / 2 || k < -std::numeric_limits<int>::max() / 2)
                throw bad("exponent too large");
        }
        if (k < 0)
            letter = letter.inverse();
        for (long long c = 0; c < (k < 0 ? -k : k); ++c)
            letters.push_back(letter);
    }
    return BraidWord(n, std::move(letters));
}

std::string to_string(const BraidWord& word) {
    std::ostringstream os;
    const auto letters = word.letters();
    bool first = true;
    for (std::size_t k = 0; k < letters.size();) {
        std::size_t run = 1;
        while (k + run < letters.size() && letters[k + run] == letters[k])
            ++run;
        const auto& l = letters[k];
        if (!first)
            os << ' ';
        first = false;
        if (l.kind == BraidLetter::Kind::standard)
            os << 's' << l.i;
        else
            os << 'a' << l.i << ',' << l.j;
        const long long e = static_cast<long long>(run) * l.sign;
        if (e != 1)
            os << '^' << e;
        k += run;
    }
    return os.str();
}

BraidWord band_to_standard(const BraidWord& word) {
    std::vector<BraidLetter> out;
    out.reserve(word.length());
    for (const auto& l : word.letters()) {
        if (l.span() == 1) {
            out.push_back(BraidLetter::sigma(l.i, l.sign));
            continue;
        }
        // a_{i,j} = s_i^-1 ... s_{j-2}^-1 s_{j-1} s_{j-2} ... s_i; only the middle
        // letter carries the sign, the conjugating letters are mirrored.
        std::vector<BraidLetter> exp;
        for (int g = l.i; g <= l.j - 2; ++g)
            exp.push_back(BraidLetter::sigma(g, -1));
        exp.push_back(BraidLetter::sigma(l.j - 1, 1));
        for (int g = l.j - 2; g >= l.i; --g)
            exp.push_back(BraidLetter::sigma(g, 1));
        if (l.sign < 0) {
            std::reverse(exp.begin(), exp.end());
            for (auto& e : exp)
                e = e.inverse();
        }
        out.insert(out.end(), exp.begin(), exp.end());
    }
    return BraidWord(word.strands(), std::move(out));
}

Permutation permutation(const BraidWord& word) {
    const int n = word.strands();
    // at[p] = strand currently at position p
    std::vector<int> at(static_cast<std::size_t>(n));
    std::iota(at.begin(), at.end(), 0);
    auto swap_at = [&](int p) { std::swap(at[static_cast<std::size_t>(p)], at[static_cast<std::size_t>(p + 1)]); };
    for (const auto& l : word.letters()) {
        if (l.span() == 1) {
            swap_at(l.i - 1);
        } else {
            // a_{i,j} exchanges the strands at positions i and j.
            std::swap(at[static_cast<std::size_t>(l.i - 1)], at[static_cast<std::size_t>(l.j - 1)]);
        }
    }
    Permutation perm(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        perm[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
    return perm;
}

std::vector<std::vector<int>> cycles(const Permutation& perm) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> cyc;
        for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) {
            seen[t] = 1;
            cyc.push_back(static_cast<int>(t));
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

GeneratorProfile generator_profile(const BraidWord& word) {
    GeneratorProfile g;
    const int n = word.strands();
    g.use.assign(static_cast<std::size_t>(std::max(n - 1, 0)), GeneratorUse::absent);
    for (const auto& l : word.letters())
        (l.positive() ? g.pos_b : g.neg_b) += 1;
    for (const BraidWord expanded = band_to_standard(word); const auto& l : expanded.letters()) {
        (l.positive() ? g.pos : g.neg) += 1;
        auto& u = g.use[static_cast<std::size_t>(l.i - 1)];
        const GeneratorUse mine = l.positive() ? GeneratorUse::positive : GeneratorUse::negative;
        if (u == GeneratorUse::absent)
            u = mine;
        else if (u != mine)
            u = GeneratorUse::mixed;
    }
    g.homogeneous = true;
    for (auto u : g.use) {
        if (u == GeneratorUse::positive)
            ++g.n_p;
        else if (u == GeneratorUse::negative)
            ++g.n_n;
        else
            g.homogeneous = false;
    }
    return g;
}

} // namespace braidnorm
