#pragma once

/**
 * One-sided derivatives of edge restrictions at junction points.
 *
 * For the cell (a, b, c) whose bottom-left vertex is the point x, the exact
 * expansion
 *
 *   f(x + 2^-j L) - f(x) = (3/5)^j (a + c - 2b) / 2 + (c - a) / (2 * 5^j)
 *
 * makes the difference quotient grow like (6/5)^j with the sign of
 * a + c - 2b, or decay like (2/5)^j when a + c = 2b. Geometric quotients
 * determine the one-sided derivative of a locally monotone function, so the
 * class is decided by that sign alone. The left side mirrors this with the
 * cell whose bottom-right vertex is x and the sign of 2c - a - b.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgh/gasket.hpp"

namespace sgh {

enum class DerivClass : std::uint8_t { PlusInfinity, MinusInfinity, Zero };

std::string_view to_string(DerivClass c);

struct JunctionDerivative {
    std::optional<DerivClass> left;   // absent at position 0
    std::optional<DerivClass> right;  // absent at position 1

    bool has_zero() const {
        return left == DerivClass::Zero || right == DerivClass::Zero;
    }
};

/// Classes of the one-sided derivatives of the restriction to `e` at a
/// dyadic position. Throws for non-dyadic positions and for a constant
/// approach cell (only possible for a constant function).
JunctionDerivative junction_derivative(const BoundaryValues& bv, Edge e, const Rational& position);

/// A junction point of the contour of G_0. The three corners are shared
/// between two edges and are identified as vertices.
struct ContourPoint {
    std::optional<std::uint8_t> vertex;  // 0, 1, 2 for p0, p1, p2
    Edge edge = Edge::Bottom;            // meaningful when !vertex
    Rational position;                   // meaningful when !vertex

    static ContourPoint on_edge(Edge e, const Rational& position);

    std::string to_string() const;
    friend bool operator==(const ContourPoint&, const ContourPoint&) = default;
};

struct EdgeObservation {
    Edge edge;
    JunctionDerivative classes;
};

/// A contour point with a Zero class, and every edge on which it was seen
/// (two edges for a corner of G_0).
struct ZeroJunction {
    ContourPoint point;
    std::vector<EdgeObservation> observations;
};

/// Every contour junction point k/2^m (m <= depth) whose restriction has a
/// Zero one-sided class. Points are listed once, by edge then position.
/// Throws for constant input.
std::vector<ZeroJunction> zero_junctions(const BoundaryValues& bv, unsigned depth);

inline std::size_t count_zero_junctions(const BoundaryValues& bv, unsigned depth) {
    return zero_junctions(bv, depth).size();
}

/// Primitive integer triples (n, m, k), n + m + k = 0, |n|,|m|,|k| <= bound,
/// with n*alpha + m*beta + k*gamma = 0. Each relation appears once, with its
/// first nonzero entry positive.
std::vector<std::array<long, 3>> integer_relations(const BoundaryValues& bv, long bound);

}  // namespace sgh
