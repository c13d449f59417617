#pragma once

#include "braidnorm/laurent.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidnorm {

/// Exact integer polynomial in r variables t_1..t_r, stored as exponent
/// vector -> nonzero coefficient. Exponents may be negative (Laurent).
class MultiPoly {
public:
    using Exponent = std::vector<int>;

    explicit MultiPoly(int variables = 1);

    int variables() const noexcept { return r_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }

    /// Adds coeff * t^exp. Throws DomainError on a length mismatch.
    void add_term(const Exponent& exp, const BigInt& coeff);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator*=(const BigInt& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a += -b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void check_arity(const MultiPoly& other) const;

    int r_;
    std::map<Exponent, BigInt> terms_;
};

/// Parse the line format `<coeff> <e1> ... <er>`; `#` starts a comment and
/// blank lines are skipped. All lines must have the same arity.
MultiPoly parse_multipoly(std::string_view text);
MultiPoly read_multipoly_file(const std::string& path);

/// One term per line in exponent order, the inverse of parse_multipoly.
std::string to_text(const MultiPoly& p);

/// Width of the support in direction C: max C.e - min C.e over monomials.
/// Throws DomainError for the zero polynomial or a length mismatch.
BigInt alexander_norm(const MultiPoly& poly, std::span<const int> C);

} // namespace braidnorm
