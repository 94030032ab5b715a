#include "sgh/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace sgh {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text, true)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) return Rational(parse_integer(num_text));

    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, false)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num_text), std::move(den));
}

Rational Rational::inverse_power_of_two(unsigned m) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, m);
    return Rational(mpz_class(1), std::move(den));
}

long Rational::dyadic_exponent() const {
    const mpz_class& den = q_.get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1) return -1;
    return static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    const auto e = static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(std::move(num), std::move(den));
}

double Rational::to_double() const {
    if (is_zero()) return 0.0;
    mpz_class a = ::abs(q_.get_num());
    mpz_class b = q_.get_den();
    // Scale so the integer quotient carries 54 or 55 significant bits.
    const long shift = 54 - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
    if (shift > 0) {
        a <<= static_cast<unsigned long>(shift);
    } else {
        b <<= static_cast<unsigned long>(-shift);
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());

    const auto extra = static_cast<unsigned long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 53;
    const mpz_class half = mpz_class(1) << (extra - 1);
    const mpz_class low = q & ((mpz_class(1) << extra) - 1);
    q >>= extra;
    if (low > half || (low == half && (r != 0 || mpz_odd_p(q.get_mpz_t())))) ++q;

    const double mag = std::ldexp(q.get_d(), static_cast<int>(static_cast<long>(extra) - shift));
    return sign() < 0 ? -mag : mag;
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sgh
