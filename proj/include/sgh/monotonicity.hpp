#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "sgh/gasket.hpp"

namespace sgh {

enum class MonotonicityClass : std::uint8_t {
    Constant,
    StrictlyIncreasing,
    StrictlyDecreasing,
    NonMonotone,
};

std::string_view to_string(MonotonicityClass c);

inline bool is_strict(MonotonicityClass c) {
    return c == MonotonicityClass::StrictlyIncreasing || c == MonotonicityClass::StrictlyDecreasing;
}

/// Monotonicity of the restriction to [p1,p2]: strictly increasing iff
/// beta < gamma and 2 beta - gamma <= alpha <= 2 gamma - beta, and the
/// mirror condition for decreasing.
MonotonicityClass classify_bottom(const BoundaryValues& bv);

MonotonicityClass classify_edge(const BoundaryValues& bv, Edge e);

/// (3 beta - delta)(3 gamma - delta) <= 0 on the bottom edge, with
/// delta = alpha + beta + gamma. Equivalent to "alpha lies between
/// 2 beta - gamma and 2 gamma - beta".
bool between_condition(const BoundaryValues& bv, Edge e);

/// The sufficient monotonicity test in midpoint form: beta < f(p12) < gamma
/// and 1/4 <= (gamma - f(p12)) / (f(p12) - beta) <= 4.
bool dsv_check(const BoundaryValues& bv, Edge e);

/// True iff one of 2a = b+c, 2b = a+c, 2c = a+b holds, which is exactly
/// when all three edges are strictly monotone. Throws for constant input.
bool simultaneous_monotone(const BoundaryValues& bv);

/// Edge "lengths" |alpha-beta|, |alpha-gamma|, |beta-gamma| and the edges
/// sorted by decreasing length (stable in Left, Right, Bottom order).
struct SideLengths {
    Rational left;    // |alpha - beta|
    Rational right;   // |alpha - gamma|
    Rational bottom;  // |beta - gamma|
    std::array<Edge, 3> descending;

    const Rational& of(Edge e) const;
};

SideLengths side_lengths(const BoundaryValues& bv);

enum class ExtremumKind : std::uint8_t { Maximum, Minimum };

std::string_view to_string(ExtremumKind k);

struct DyadicInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

struct ExtremumAtJunction {
    Rational position;
};

/// Result of bisecting toward the unique extremum of a non-monotone edge.
/// `trace` holds the bracket after each level, starting with [0,1].
struct ExtremumLocation {
    std::variant<DyadicInterval, ExtremumAtJunction> where;
    ExtremumKind kind = ExtremumKind::Maximum;
    std::vector<DyadicInterval> trace;

    bool at_junction() const { return std::holds_alternative<ExtremumAtJunction>(where); }
};

/// Requires classify_edge(bv, e) == NonMonotone and depth >= 1.
ExtremumLocation locate_extremum(const BoundaryValues& bv, Edge e, unsigned depth);

}  // namespace sgh
