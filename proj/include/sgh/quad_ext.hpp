#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sgh/rational.hpp"

namespace sgh {

/// Element a + b*sqrt(13) of the real quadratic field Q(sqrt 13).
///
/// sqrt(13) is irrational, so the pair (a, b) is unique and equality is
/// componentwise. Ordering is the one induced by the real embedding with
/// sqrt(13) > 0 and is decided without floating point.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational rational_part, Rational root13_part = Rational())  // NOLINT
        : a_(std::move(rational_part)), b_(std::move(root13_part)) {}

    static QuadExt root13() { return QuadExt(Rational(0), Rational(1)); }

    /// Parses the form printed by to_string(): "a+b*sqrt13" (also "a-b*sqrt13").
    static QuadExt parse(std::string_view text);

    const Rational& rational_part() const { return a_; }
    const Rational& root13_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt conjugate() const { return QuadExt(a_, -b_); }
    /// a^2 - 13 b^2.
    Rational norm() const { return a_ * a_ - Rational(13) * b_ * b_; }

    /// Exact sign of a + b*sqrt(13).
    int sign() const;
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }
    QuadExt pow(long exponent) const;

    double to_double() const;
    std::string to_string() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ * y.a_ + Rational(13) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace sgh
