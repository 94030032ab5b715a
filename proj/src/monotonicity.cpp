#include "sgh/monotonicity.hpp"

#include <algorithm>
#include <cassert>

namespace sgh {

std::string_view to_string(MonotonicityClass c) {
    switch (c) {
        case MonotonicityClass::Constant: return "Constant";
        case MonotonicityClass::StrictlyIncreasing: return "StrictlyIncreasing";
        case MonotonicityClass::StrictlyDecreasing: return "StrictlyDecreasing";
        case MonotonicityClass::NonMonotone: return "NonMonotone";
    }
    return "?";
}

std::string_view to_string(ExtremumKind k) {
    return k == ExtremumKind::Maximum ? "max" : "min";
}

namespace {

bool bottom_between(const BoundaryValues& bv) {
    const Rational delta = bv.delta();
    const Rational lhs = Rational(3) * bv.beta - delta;
    const Rational rhs = Rational(3) * bv.gamma - delta;
    return (lhs * rhs).sign() <= 0;
}

}  // namespace

MonotonicityClass classify_bottom(const BoundaryValues& bv) {
    if (bv.is_constant()) return MonotonicityClass::Constant;
    const Rational two(2);
    const Rational& a = bv.alpha;
    const Rational& b = bv.beta;
    const Rational& g = bv.gamma;
    MonotonicityClass result = MonotonicityClass::NonMonotone;
    if (b < g && two * b - g <= a && a <= two * g - b) {
        result = MonotonicityClass::StrictlyIncreasing;
    } else if (b > g && two * g - b <= a && a <= two * b - g) {
        result = MonotonicityClass::StrictlyDecreasing;
    }
    assert(is_strict(result) == bottom_between(bv));
    return result;
}

MonotonicityClass classify_edge(const BoundaryValues& bv, Edge e) {
    return classify_bottom(relabel_to_bottom(bv, e));
}

bool between_condition(const BoundaryValues& bv, Edge e) {
    return bottom_between(relabel_to_bottom(bv, e));
}

bool dsv_check(const BoundaryValues& bv, Edge e) {
    const BoundaryValues t = relabel_to_bottom(bv, e);
    const Rational mid = extend_once(t).p12;
    if (!(t.beta < mid && mid < t.gamma)) return false;
    const Rational ratio = (t.gamma - mid) / (mid - t.beta);
    return Rational(1, 4) <= ratio && ratio <= Rational(4);
}

bool simultaneous_monotone(const BoundaryValues& bv) {
    if (bv.is_constant()) {
        throw PreconditionError("simultaneous monotonicity is defined for nonconstant functions only");
    }
    const Rational two(2);
    return two * bv.alpha == bv.beta + bv.gamma || two * bv.beta == bv.alpha + bv.gamma ||
           two * bv.gamma == bv.alpha + bv.beta;
}

const Rational& SideLengths::of(Edge e) const {
    switch (e) {
        case Edge::Bottom: return bottom;
        case Edge::Left: return left;
        case Edge::Right: return right;
    }
    return bottom;
}

SideLengths side_lengths(const BoundaryValues& bv) {
    SideLengths s{(bv.alpha - bv.beta).abs(), (bv.alpha - bv.gamma).abs(), (bv.beta - bv.gamma).abs(),
                  {Edge::Left, Edge::Right, Edge::Bottom}};
    std::stable_sort(s.descending.begin(), s.descending.end(),
                     [&](Edge x, Edge y) { return s.of(x) > s.of(y); });
    return s;
}

ExtremumLocation locate_extremum(const BoundaryValues& bv, Edge e, unsigned depth) {
    if (depth < 1) throw PreconditionError("extremum search depth must be positive");
    BoundaryValues cell = relabel_to_bottom(bv, e);
    if (classify_bottom(cell) != MonotonicityClass::NonMonotone) {
        throw PreconditionError("restriction to the " + std::string(to_string(e)) +
                                " edge is monotone; it has no interior extremum");
    }

    const Rational two(2);
    ExtremumLocation loc;
    loc.kind = cell.alpha > sgh::max(two * cell.beta - cell.gamma, two * cell.gamma - cell.beta)
                   ? ExtremumKind::Maximum
                   : ExtremumKind::Minimum;

    DyadicInterval bracket{Rational(0), Rational(1)};
    loc.trace.push_back(bracket);
    for (unsigned level = 1; level <= depth; ++level) {
        const Rational mid = (bracket.lo + bracket.hi) / two;
        BoundaryValues left = child_values(cell, 1);
        BoundaryValues right = child_values(cell, 2);
        const auto cl = classify_bottom(left);
        const auto cr = classify_bottom(right);
        if (cl == MonotonicityClass::Constant || cr == MonotonicityClass::Constant) {
            throw Error("constant sub-cell while bracketing the extremum at level " + std::to_string(level));
        }
        if (cl == MonotonicityClass::NonMonotone && cr == MonotonicityClass::NonMonotone) {
            throw Error("two non-monotone halves at level " + std::to_string(level) +
                        "; extremum is not unique");
        }
        if (cl == MonotonicityClass::NonMonotone) {
            cell = std::move(left);
            bracket.hi = mid;
        } else if (cr == MonotonicityClass::NonMonotone) {
            cell = std::move(right);
            bracket.lo = mid;
        } else if (cl != cr) {
            loc.where = ExtremumAtJunction{mid};
            return loc;
        } else {
            throw Error("both halves monotone in the same direction at level " + std::to_string(level));
        }
        loc.trace.push_back(bracket);
    }
    loc.where = bracket;
    return loc;
}

}  // namespace sgh
