#pragma once

/**
 * Harmonic functions on the Sierpinski gasket.
 *
 * A harmonic function is fixed by its values at the three boundary
 * vertices p0 (apex), p1 and p2. Every cell of the gasket is named by a
 * word over {0,1,2}; the child i of a cell is the image of the cell under
 * the contraction toward its vertex p_i, and its boundary triple is
 *
 *   child 0: (f(p0),  f(p01), f(p02))
 *   child 1: (f(p01), f(p1),  f(p12))
 *   child 2: (f(p02), f(p12), f(p2))
 *
 * with midpoint values given by the 1/5-2/5 extension rule. Words over
 * {1,2} therefore name the cells whose bottom edge lies on [p1, p2].
 */

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgh/rational.hpp"

namespace sgh {

/// Values of a harmonic function at p0, p1, p2.
struct BoundaryValues {
    Rational alpha;  // f(p0)
    Rational beta;   // f(p1)
    Rational gamma;  // f(p2)

    Rational delta() const { return alpha + beta + gamma; }
    bool is_constant() const { return alpha == beta && beta == gamma; }
    Rational min() const { return sgh::min(alpha, sgh::min(beta, gamma)); }
    Rational max() const { return sgh::max(alpha, sgh::max(beta, gamma)); }

    BoundaryValues operator+(const BoundaryValues& o) const {
        return {alpha + o.alpha, beta + o.beta, gamma + o.gamma};
    }
    BoundaryValues operator*(const Rational& s) const { return {alpha * s, beta * s, gamma * s}; }

    friend bool operator==(const BoundaryValues&, const BoundaryValues&) = default;
};

std::string to_string(const BoundaryValues& bv);

/// The three edges of the outer triangle G_0. Positions along an edge run
/// from 0 at the first-named endpoint to 1 at the second.
enum class Edge : std::uint8_t {
    Bottom,  // [p1, p2]
    Left,    // [p0, p1]
    Right,   // [p0, p2]
};

inline constexpr std::array<Edge, 3> kAllEdges{Edge::Bottom, Edge::Left, Edge::Right};

std::string_view to_string(Edge e);
Edge parse_edge(std::string_view text);

/// Relabels the triple so that `e` becomes the bottom edge with the same
/// orientation: Left maps to (gamma, alpha, beta), Right to (beta, alpha, gamma).
BoundaryValues relabel_to_bottom(const BoundaryValues& bv, Edge e);

/// A word over {0,1,2}; the empty word is G_0.
class CellAddress {
public:
    CellAddress() = default;
    explicit CellAddress(std::vector<std::uint8_t> digits);

    /// Parses a string of digits 0-2; "" is the root.
    static CellAddress parse(std::string_view text);

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t depth() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// True if the word uses only 1 and 2, i.e. the cell sits on [p1, p2].
    bool on_bottom_edge() const;

    CellAddress child(std::uint8_t digit) const;
    CellAddress operator+(const CellAddress& suffix) const;

    std::string to_string() const;

    friend bool operator==(const CellAddress&, const CellAddress&) = default;

private:
    std::vector<std::uint8_t> digits_;
};

/// A point of an edge of G_0 at a rational position in [0, 1].
struct EdgePoint {
    Edge edge = Edge::Bottom;
    Rational position;
};

struct Midpoints {
    Rational p12;
    Rational p02;
    Rational p01;
};

/// Midpoint values from the extension rule.
Midpoints extend_once(const BoundaryValues& bv);

BoundaryValues child_values(const BoundaryValues& bv, std::uint8_t digit);

BoundaryValues cell_values(const BoundaryValues& bv, const CellAddress& addr);

/// Position k/2^m in [0,1] split into numerator and exponent (k odd unless
/// the point is 0 or 1, in which case m = 0).
struct DyadicPosition {
    mpz_class k;
    unsigned m = 0;
};

/// Throws PreconditionError for positions outside [0,1] or with a
/// denominator that is not a power of two.
DyadicPosition to_dyadic(const Rational& position);

/// Depth-m cell on [p1,p2] whose left bottom vertex is k/2^m (k < 2^m).
CellAddress bottom_cell_starting_at(const mpz_class& k, unsigned m);

/// Boundary triples of the 2^depth cells on [p1,p2] at the given depth,
/// left to right. Cell k spans [k/2^depth, (k+1)/2^depth].
std::vector<BoundaryValues> bottom_row(const BoundaryValues& bv, unsigned depth);

/// f(k/2^depth) on [p1,p2] for k = 0..2^depth.
std::vector<Rational> sample_bottom(const BoundaryValues& bv, unsigned depth);

inline constexpr unsigned kMaxRowDepth = 24;

/// Value at a dyadic point of an edge.
Rational eval_dyadic(const BoundaryValues& bv, const EdgePoint& pt);

/// Same as eval_dyadic on the bottom edge.
Rational eval_bottom(const BoundaryValues& bv, const Rational& position);

/// The four families of dyadic points with closed-form values.
enum class ClosedFormPoint : std::uint8_t {
    HalfPower,          // 1/2^m
    OneMinusHalfPower,  // 1 - 1/2^m
    LeftOfMid,          // l_m = 1/2 - 1/2^(m+1)
    RightOfMid,         // r_m = 1/2 + 1/2^(m+1)
};

Rational closed_form_position(unsigned m, ClosedFormPoint which);

/// Coefficients (of alpha, beta, gamma) of the closed-form value at the
/// given point on [p1,p2]. RightOfMid is the beta/gamma mirror of LeftOfMid.
std::array<Rational, 3> closed_form_coefficients(unsigned m, ClosedFormPoint which);

/// Closed-form value at closed_form_position(m, which); m >= 1.
Rational closed_form_value(const BoundaryValues& bv, unsigned m, ClosedFormPoint which);

/// 2 alpha - beta - gamma: normal derivative at p0 (unnormalized by
/// constants that do not affect its sign or vanishing).
Rational normal_derivative(const BoundaryValues& bv);

/// (5/3)^m (2 f(p0) - f(x_m) - f(y_m)) where x_m, y_m are the two
/// neighbours of p0 in G_m. Equals normal_derivative for every m.
Rational renormalized_apex_difference(const BoundaryValues& bv, unsigned m);

}  // namespace sgh
