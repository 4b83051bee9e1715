#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational arithmetic.
 *
 * Every term, coefficient and determinant in this library is a Rational.
 * The representation is canonical at all times:
 *  - denominator > 0 (sign lives on the numerator),
 *  - gcd(|numerator|, denominator) = 1,
 *  - zero is uniquely 0/1.
 *
 * Canonical form makes equality structural, so tests can assert exact
 * matches everywhere; there is no epsilon anywhere in this project.
 * Storage is GMP (mpq) underneath.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "mstep/errors.hpp"

namespace mstep {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}

    /// Canonicalizing constructor; throws ZeroDenominator when den == 0.
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses the literal grammar: '-'? digits ('/' digits)?  e.g. "-5/16", "208".
    static Rational from_string(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Canonical literal: "num" when integral, otherwise "num/den".
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs) { v_ += rhs.v_; return *this; }
    Rational& operator-=(const Rational& rhs) { v_ -= rhs.v_; return *this; }
    Rational& operator*=(const Rational& rhs) { v_ *= rhs.v_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

private:
    mpq_class v_; // canonical by construction
};

/// Reciprocal; throws DivisionByZero on zero input.
Rational inv(const Rational& a);

/// Exact integer power, any sign of exponent; throws DivisionByZero for 0^k, k < 0.
Rational pow(const Rational& a, std::int64_t k);

Rational abs(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace mstep
