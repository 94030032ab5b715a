#pragma once

// Test-only helpers. The oracles here deliberately avoid the library's
// shortcuts: derivative classes come from actual difference quotients, not
// from the sign rule on cell values.

#include <optional>
#include <random>
#include <vector>

#include "sgh/derivative.hpp"
#include "sgh/gasket.hpp"
#include "sgh/sampling.hpp"

namespace sgh::test {

inline BoundaryValues bv(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

inline BoundaryValues parsed(const char* a, const char* b, const char* c) {
    return {Rational::parse(a), Rational::parse(b), Rational::parse(c)};
}

/// Class of the one-sided derivative at x on [p1,p2] read off the exact
/// quotients (f(x + s 2^-j) - f(x)) / (s 2^-j), s = +1 right, -1 left, for
/// j up to `last`: Zero when they shrink geometrically, an infinity when
/// they grow with a fixed sign.
inline std::optional<DerivClass> quotient_class(const BoundaryValues& t, const Rational& x, int side,
                                                unsigned last = 40) {
    const Rational fx = eval_bottom(t, x);
    std::vector<Rational> q;
    for (unsigned j = last - 2; j <= last; ++j) {
        const Rational step = Rational(side) * Rational::inverse_power_of_two(j);
        const Rational y = x + step;
        if (y < Rational(0) || y > Rational(1)) return std::nullopt;
        q.push_back((eval_bottom(t, y) - fx) / step);
    }
    const bool shrinking = q[2].abs() * Rational(2) < q[1].abs() && q[1].abs() * Rational(2) < q[0].abs();
    if (shrinking || q[2].is_zero()) return DerivClass::Zero;
    if (q[0].sign() > 0 && q[0] < q[1] && q[1] < q[2]) return DerivClass::PlusInfinity;
    if (q[0].sign() < 0 && q[0] > q[1] && q[1] > q[2]) return DerivClass::MinusInfinity;
    return std::nullopt;  // undecided
}

inline bool strictly_increasing(const std::vector<Rational>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1] < v[i])) return false;
    }
    return true;
}

inline bool strictly_decreasing(const std::vector<Rational>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1] > v[i])) return false;
    }
    return true;
}

inline bool monotone(const std::vector<Rational>& v) {
    bool up = true, down = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        up = up && v[i - 1] <= v[i];
        down = down && v[i - 1] >= v[i];
    }
    return up || down;
}

}  // namespace sgh::test
