#include "braidnorm/multipoly.hpp"

#include "braidnorm/error.hpp"

#include <fstream>
#include <sstream>

namespace braidnorm {

MultiPoly::MultiPoly(int variables) : r_(variables) {
    if (variables < 1)
        throw DomainError("a multivariable polynomial needs at least one variable");
}

void MultiPoly::check_arity(const MultiPoly& other) const {
    if (other.r_ != r_)
        throw DomainError("polynomials in " + std::to_string(r_) + " and " +
                          std::to_string(other.r_) + " variables do not mix");
}

void MultiPoly::add_term(const Exponent& exp, const BigInt& coeff) {
    if (static_cast<int>(exp.size()) != r_)
        throw DomainError("exponent vector of length " + std::to_string(exp.size()) +
                          " for a polynomial in " + std::to_string(r_) + " variables");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& s) {
    if (s == 0)
        terms_.clear();
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly out(a.r_);
    MultiPoly::Exponent e(static_cast<std::size_t>(a.r_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0)
        throw DomainError("negative power of a polynomial");
    MultiPoly result(r_);
    result.add_term(Exponent(static_cast<std::size_t>(r_), 0), 1);
    for (int k = 0; k < e; ++k)
        result = result * *this;
    return result;
}

MultiPoly parse_multipoly(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int arity = -1;
    int lineno = 0;
    std::vector<std::pair<MultiPoly::Exponent, BigInt>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        std::vector<std::string> toks;
        while (fields >> tok)
            toks.push_back(tok);
        if (toks.empty())
            continue;
        auto where = [&] { return " on line " + std::to_string(lineno); };
        if (toks.size() < 2)
            throw ParseError("a term needs a coefficient and at least one exponent" + where());
        BigInt c;
        if (c.set_str(toks[0], 10) != 0)
            throw ParseError("bad coefficient '" + toks[0] + "'" + where());
        MultiPoly::Exponent e;
        for (std::size_t k = 1; k < toks.size(); ++k) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(toks[k], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != toks[k].size())
                throw ParseError("bad exponent '" + toks[k] + "'" + where());
            e.push_back(v);
        }
        if (arity < 0)
            arity = static_cast<int>(e.size());
        else if (arity != static_cast<int>(e.size()))
            throw ParseError("inconsistent number of exponents" + where());
        rows.emplace_back(std::move(e), std::move(c));
    }
    if (arity < 0)
        throw ParseError("polynomial file has no terms");
    MultiPoly p(arity);
    for (const auto& [e, c] : rows)
        p.add_term(e, c);
    return p;
}

MultiPoly read_multipoly_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open polynomial file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_multipoly(ss.str());
}

std::string to_text(const MultiPoly& p) {
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        out += c.get_str();
        for (int x : e) {
            out += ' ';
            out += std::to_string(x);
        }
        out += '\n';
    }
    return out;
}

BigInt alexander_norm(const MultiPoly& poly, std::span<const int> C) {
    if (poly.is_zero())
        throw DomainError("the Alexander norm of the zero polynomial is undefined");
    if (static_cast<int>(C.size()) != poly.variables())
        throw DomainError("class of length " + std::to_string(C.size()) + " for a polynomial in " +
                          std::to_string(poly.variables()) + " variables");
    bool first = true;
    BigInt lo;
    BigInt hi;
    for (const auto& [e, c] : poly.terms()) {
        BigInt dot = 0;
        for (std::size_t k = 0; k < e.size(); ++k)
            dot += BigInt(C[k]) * e[k];
        if (first) {
            lo = hi = dot;
            first = false;
        } else {
            if (dot < lo)
                lo = dot;
            if (dot > hi)
                hi = dot;
        }
    }
    return hi - lo;
}

} // namespace braidnorm
