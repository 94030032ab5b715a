#include "sgh/quad_ext.hpp"

#include <cmath>
#include <ostream>

namespace sgh {

int QuadExt::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of |a| and |b|*sqrt(13) wins.
    const auto c = (a_ * a_) <=> (Rational(13) * b_ * b_);
    return c > 0 ? sa : sb;  // a^2 == 13 b^2 has no nonzero rational solution
}

QuadExt QuadExt::pow(long exponent) const {
    if (exponent < 0) return QuadExt(Rational(1)) / pow(-exponent);
    QuadExt result(Rational(1));
    QuadExt base = *this;
    for (auto e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if (e & 1UL) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

double QuadExt::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(13.0);
}

std::string QuadExt::to_string() const {
    std::string out = a_.to_string();
    out += b_.sign() < 0 ? "-" : "+";
    out += b_.abs().to_string();
    out += "*sqrt13";
    return out;
}

QuadExt QuadExt::parse(std::string_view text) {
    constexpr std::string_view suffix = "*sqrt13";
    const auto bad = [&] { return ParseError("malformed Q(sqrt13) value '" + std::string(text) + "'"); };
    if (text.size() <= suffix.size() || text.substr(text.size() - suffix.size()) != suffix) throw bad();
    const auto body = text.substr(0, text.size() - suffix.size());
    // Split at the last sign that is not the leading one.
    const auto split = body.find_last_of("+-");
    if (split == std::string_view::npos || split == 0) throw bad();
    Rational a = Rational::parse(body.substr(0, split));
    Rational b = Rational::parse(body.substr(split + 1));
    if (body[split] == '-') b = -b;
    return QuadExt(std::move(a), std::move(b));
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw DivisionByZero();
    const Rational n = y.norm();
    const QuadExt num = x * y.conjugate();
    return QuadExt(num.a_ / n, num.b_ / n);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace sgh
