#include "braidnorm/laurent.hpp"

#include "braidnorm/error.hpp"

#include <algorithm>
#include <sstream>

namespace braidnorm {

namespace {

bool key_less(const LaurentVZ::Term& a, const LaurentVZ::Term& b) noexcept {
    return a.v != b.v ? a.v < b.v : a.z < b.z;
}

bool same_key(const LaurentVZ::Term& a, const LaurentVZ::Term& b) noexcept {
    return a.v == b.v && a.z == b.z;
}

// Sort, merge equal keys, drop zeros.
std::vector<LaurentVZ::Term> normalize(std::vector<LaurentVZ::Term> t) {
    std::sort(t.begin(), t.end(), key_less);
    std::vector<LaurentVZ::Term> out;
    out.reserve(t.size());
    for (auto& term : t) {
        if (!out.empty() && same_key(out.back(), term))
            out.back().coeff += term.coeff;
        else {
            if (!out.empty() && out.back().coeff == 0)
                out.pop_back();
            out.push_back(std::move(term));
        }
    }
    if (!out.empty() && out.back().coeff == 0)
        out.pop_back();
    return out;
}

void require_nonzero(const LaurentVZ& p, const char* what) {
    if (p.is_zero())
        throw DomainError(std::string(what) + " of the zero polynomial is undefined");
}

} // namespace

LaurentVZ LaurentVZ::monomial(const BigInt& coeff, int v_exp, int z_exp) {
    LaurentVZ p;
    if (coeff != 0)
        p.terms_.push_back({v_exp, z_exp, coeff});
    return p;
}

LaurentVZ LaurentVZ::from_terms(std::vector<Term> terms) {
    LaurentVZ p;
    p.terms_ = normalize(std::move(terms));
    return p;
}

BigInt LaurentVZ::coeff(int v_exp, int z_exp) const {
    const Term key{v_exp, z_exp, 0};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
    if (it != terms_.end() && same_key(*it, key))
        return it->coeff;
    return 0;
}

int LaurentVZ::min_v() const {
    require_nonzero(*this, "min v-degree");
    return terms_.front().v;
}

int LaurentVZ::max_v() const {
    require_nonzero(*this, "max v-degree");
    return terms_.back().v;
}

int LaurentVZ::min_z() const {
    require_nonzero(*this, "min z-degree");
    int m = terms_.front().z;
    for (const auto& t : terms_)
        m = std::min(m, t.z);
    return m;
}

int LaurentVZ::max_z() const {
    require_nonzero(*this, "max z-degree");
    int m = terms_.front().z;
    for (const auto& t : terms_)
        m = std::max(m, t.z);
    return m;
}

LaurentVZ LaurentVZ::operator-() const {
    LaurentVZ r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

void LaurentVZ::add_scaled(const LaurentVZ& rhs, const BigInt& c, int dv, int dz) {
    if (rhs.is_zero() || c == 0)
        return;
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Term shifted{b->v + dv, b->z + dz, 0};
        if (a == terms_.end() || key_less(shifted, *a)) {
            shifted.coeff = b->coeff * c;
            out.push_back(std::move(shifted));
            ++b;
        } else if (key_less(*a, shifted)) {
            out.push_back(std::move(*a++));
        } else {
            a->coeff += b->coeff * c;
            if (a->coeff != 0)
                out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentVZ& LaurentVZ::operator+=(const LaurentVZ& rhs) {
    add_scaled(rhs, 1, 0, 0);
    return *this;
}

LaurentVZ& LaurentVZ::operator-=(const LaurentVZ& rhs) {
    add_scaled(rhs, -1, 0, 0);
    return *this;
}

LaurentVZ operator*(const LaurentVZ& a, const LaurentVZ& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    const LaurentVZ& small = a.size() <= b.size() ? a : b;
    const LaurentVZ& large = a.size() <= b.size() ? b : a;
    LaurentVZ acc;
    for (const auto& t : small.terms_)
        acc.add_scaled(large, t.coeff, t.v, t.z);
    return acc;
}

LaurentVZ& LaurentVZ::operator*=(const LaurentVZ& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentVZ& LaurentVZ::operator*=(const BigInt& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= s;
    return *this;
}

LaurentVZ LaurentVZ::shifted(int dv, int dz) const {
    LaurentVZ r = *this;
    for (auto& t : r.terms_) {
        t.v += dv;
        t.z += dz;
    }
    return r;
}

LaurentVZ LaurentVZ::pow(int e) const {
    if (e < 0)
        throw DomainError("negative power of a polynomial");
    LaurentVZ result(1);
    LaurentVZ base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

LaurentVZ LaurentVZ::z_slice(int z_exp) const {
    LaurentVZ r;
    for (const auto& t : terms_)
        if (t.z == z_exp)
            r.terms_.push_back({t.v, 0, t.coeff});
    return r;
}

LaurentVZ LaurentVZ::at_v_one() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_)
        t.push_back({0, term.z, term.coeff});
    return from_terms(std::move(t));
}

LaurentVZ exact_div(const LaurentVZ& p, const LaurentVZ& d) {
    if (d.is_zero())
        throw DomainError("division by the zero polynomial");
    if (p.is_zero())
        return {};
    // Newton polytope of the quotient is NP(p) - NP(d); any candidate term
    // outside that box proves a remainder.
    const int v_lo = p.min_v() - d.min_v();
    const int v_hi = p.max_v() - d.max_v();
    const int z_lo = p.min_z() - d.min_z();
    const int z_hi = p.max_z() - d.max_z();
    const auto& lead = d.terms().back(); // largest (v, z)

    LaurentVZ rem = p;
    std::vector<LaurentVZ::Term> quotient;
    while (!rem.is_zero()) {
        const auto& top = rem.terms().back();
        const int qv = top.v - lead.v;
        const int qz = top.z - lead.z;
        if (qv < v_lo || qv > v_hi || qz < z_lo || qz > z_hi ||
            !mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
            throw NotDivisible("polynomial is not divisible by " + to_string(d));
        BigInt qc;
        mpz_divexact(qc.get_mpz_t(), top.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
        rem.add_scaled(d, -qc, qv, qz);
        quotient.push_back({qv, qz, std::move(qc)});
    }
    return LaurentVZ::from_terms(std::move(quotient));
}

LaurentVZ eval_v0(const LaurentVZ& p) {
    if (!p.is_zero() && p.min_v() < 0)
        throw DomainError("evaluation at v = 0 needs a polynomial in v, got " + to_string(p));
    LaurentVZ r;
    for (const auto& t : p.terms())
        if (t.v == 0)
            r += LaurentVZ::monomial(t.coeff, 0, t.z);
    return r;
}

int min_v_degree(const LaurentVZ& p) { return p.min_v(); }

LaurentVZ loop_value() {
    return LaurentVZ::from_terms({{0, -1, 1}, {2, -1, -1}});
}

std::vector<LaurentVZ::Term> canonical_terms(const LaurentVZ& p) {
    std::vector<LaurentVZ::Term> t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        return a.z != b.z ? a.z < b.z : a.v > b.v;
    });
    return t;
}

std::string to_string(const LaurentVZ& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : canonical_terms(p)) {
        if (first)
            os << t.coeff.get_str();
        else if (t.coeff < 0)
            os << " - " << BigInt(-t.coeff).get_str();
        else
            os << " + " << t.coeff.get_str();
        os << "*v^" << t.v << "*z^" << t.z;
        first = false;
    }
    return os.str();
}

} // namespace braidnorm
