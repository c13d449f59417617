#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace braidnorm {

using BigInt = mpz_class;

/// Exact Laurent polynomial in two variables v and z with integer coefficients.
///
/// Terms are kept sorted by (v exponent, z exponent) with no zero coefficients,
/// so equality is structural and the zero polynomial is the empty term list.
class LaurentVZ {
public:
    struct Term {
        int v = 0;
        int z = 0;
        BigInt coeff;

        friend bool operator==(const Term& a, const Term& b) {
            return a.v == b.v && a.z == b.z && a.coeff == b.coeff;
        }
    };

    LaurentVZ() = default;
    explicit LaurentVZ(long c) : LaurentVZ(monomial(BigInt(c), 0, 0)) {}

    static LaurentVZ monomial(const BigInt& coeff, int v_exp, int z_exp);
    static LaurentVZ v(int e = 1) { return monomial(1, e, 0); }
    static LaurentVZ z(int e = 1) { return monomial(1, 0, e); }
    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    static LaurentVZ from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    BigInt coeff(int v_exp, int z_exp) const;

    int min_v() const;
    int max_v() const;
    int min_z() const;
    int max_z() const;

    LaurentVZ operator-() const;
    LaurentVZ& operator+=(const LaurentVZ& rhs);
    LaurentVZ& operator-=(const LaurentVZ& rhs);
    LaurentVZ& operator*=(const LaurentVZ& rhs);
    LaurentVZ& operator*=(const BigInt& scalar);

    friend LaurentVZ operator+(LaurentVZ a, const LaurentVZ& b) { return a += b; }
    friend LaurentVZ operator-(LaurentVZ a, const LaurentVZ& b) { return a -= b; }
    friend LaurentVZ operator*(const LaurentVZ& a, const LaurentVZ& b);
    friend LaurentVZ operator*(LaurentVZ a, const BigInt& s) { return a *= s; }
    friend LaurentVZ operator*(const BigInt& s, LaurentVZ a) { return a *= s; }

    /// Multiply by v^dv z^dz.
    LaurentVZ shifted(int dv, int dz) const;
    /// Add coeff * v^dv z^dz * rhs in place (the hot accumulation step).
    void add_scaled(const LaurentVZ& rhs, const BigInt& coeff, int dv, int dz);

    /// Non-negative integer power; throws DomainError for e < 0.
    LaurentVZ pow(int e) const;

    /// Terms whose z exponent equals `z_exp`, as a polynomial in v alone.
    LaurentVZ z_slice(int z_exp) const;
    /// Substitute v = 1.
    LaurentVZ at_v_one() const;

    friend bool operator==(const LaurentVZ&, const LaurentVZ&) = default;

private:
    std::vector<Term> terms_; // sorted by (v, z)
};

/// q with q * d == p exactly. Throws DomainError if d is zero and
/// NotDivisible if a remainder is left.
LaurentVZ exact_div(const LaurentVZ& p, const LaurentVZ& d);

/// Keep the v^0 terms. Throws DomainError if p has a negative v exponent.
LaurentVZ eval_v0(const LaurentVZ& p);

/// Minimum v exponent. Throws DomainError on the zero polynomial.
int min_v_degree(const LaurentVZ& p);

/// (1 - v^2) / z, the value of one free strand.
LaurentVZ loop_value();

/// Canonical text form, terms ordered by z ascending then v descending:
/// `-1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2`. Zero prints as `0`.
std::string to_string(const LaurentVZ& p);

/// Terms in the canonical print order.
std::vector<LaurentVZ::Term> canonical_terms(const LaurentVZ& p);

} // namespace braidnorm
