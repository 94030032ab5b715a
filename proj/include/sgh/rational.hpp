#pragma once

/**
 * Exact rational numbers.
 *
 * Values are kept in canonical form after every operation: the
 * denominator is positive and coprime to the numerator, zero is 0/1.
 * Storage is a GMP mpq_t, so numerator and denominator are unbounded.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sgh/error.hpp"

namespace sgh {

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpz_class num, mpz_class den = 1);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional sign on p, q > 0 after sign handling).
    static Rational parse(std::string_view text);

    /// 1/2^m.
    static Rational inverse_power_of_two(unsigned m);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// If the denominator is 2^m, returns m; otherwise -1.
    long dyadic_exponent() const;

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational reciprocal() const;
    Rational pow(long exponent) const;

    /// Nearest double (round half to even); for display only.
    double to_double() const;

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;  // canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sgh
