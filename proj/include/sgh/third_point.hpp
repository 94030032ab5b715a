#pragma once

/**
 * Values and difference quotients at the point 1/3 of [p1, p2].
 *
 * The triangles D_m (D_0 = G_0, D_m the right half-cell of the left
 * half-cell of D_(m-1), i.e. cell address "12" repeated m times) have
 * bottom vertices p1_m = 1/3 - (1/3)(1/4)^m and p2_m = 1/3 + (2/3)(1/4)^m,
 * and their boundary values obey
 *
 *   alpha_m = (6 alpha + 13 beta + 6 gamma) / 25
 *   beta_m  = (4 alpha + 16 beta + 5 gamma) / 25
 *   gamma_m = (alpha + 2 beta + 2 gamma) / 5
 *
 * (previous-level values on the right). c = 5 alpha_m + 15 beta_m + 7 gamma_m
 * is conserved, so f(1/3) = c/27. Eliminating alpha leaves a 2x2 linear
 * recursion whose eigenvalues s, h = (7 +- sqrt 13)/50 lie in (0, 1/4),
 * which makes both one-sided quotients at 1/3 tend to zero.
 */

#include <cstdint>

#include "sgh/gasket.hpp"
#include "sgh/quad_ext.hpp"

namespace sgh {

/// Constants of the closed-form solution, all in Q(sqrt 13).
struct ThirdPointContext {
    Rational c;   // 5 alpha + 15 beta + 7 gamma
    Rational u;   // 10
    QuadExt v;    // 1 - sqrt13
    QuadExt s;    // (7 + sqrt13)/50
    QuadExt h;    // (v + 6)/50 = (7 - sqrt13)/50
    QuadExt w;    // (9 - sqrt13) c / 25
    QuadExt t0;   // 10 beta + v gamma
    QuadExt l;    // c/25 + w / (50 (s - 1))
    QuadExt k;    // -(w/(s - 1) + t0) / 50
    QuadExt A;    // coefficient of h^m in gamma_m
    QuadExt B;    // coefficient of s^m in gamma_m, k/(s - h)
    QuadExt beta_A;  // coefficient of h^m in beta_m, -(v/u) A
    QuadExt beta_B;  // coefficient of s^m in beta_m

    static ThirdPointContext from(const BoundaryValues& bv);
};

struct TriangleSequence {
    unsigned m = 0;
    Rational alpha_m;
    Rational beta_m;
    Rational gamma_m;
    Rational p1_m;
    Rational p2_m;
};

/// c/27 = f(1/3) on [p1, p2].
Rational third_point_value(const BoundaryValues& bv);

/// (5 alpha + 7 beta + 15 gamma)/27 = f(2/3) on [p1, p2].
Rational two_thirds_point_value(const BoundaryValues& bv);

TriangleSequence triangle_sequence(const BoundaryValues& bv, unsigned m);

/// A h^m + B s^m + c/27, evaluated in Q(sqrt 13); its sqrt13 part is zero.
QuadExt gamma_closed_form_exact(const BoundaryValues& bv, unsigned m);
QuadExt beta_closed_form_exact(const BoundaryValues& bv, unsigned m);

/// Rational value of the closed forms. Throws std::logic_error if the
/// sqrt13 part fails to cancel.
Rational gamma_closed_form(const BoundaryValues& bv, unsigned m);
Rational beta_closed_form(const BoundaryValues& bv, unsigned m);

enum class Side : std::uint8_t { Left, Right };

/// Right: (gamma_m - c/27)/(p2_m - 1/3). Left: (beta_m - c/27)/(p1_m - 1/3).
Rational third_point_quotient(const BoundaryValues& bv, unsigned m, Side side);

/// The same quotient from the closed form: (3/2)(A (4h)^m + B (4s)^m) on
/// the right and -3 (beta_A (4h)^m + beta_B (4s)^m) on the left.
QuadExt third_point_quotient_closed_form(const BoundaryValues& bv, unsigned m, Side side);

enum class ThirdOf : std::uint8_t { OneThird, TwoThirds };

struct PointValue {
    Rational position;
    Rational value;
};

/// Third point of the bottom side of a cell sitting on [p1, p2]; the
/// position is global, (3k+1)/(3 2^m) or (3k+2)/(3 2^m).
/// Throws for addresses containing digit 0.
PointValue third_point_of_subedge(const BoundaryValues& bv, const CellAddress& addr, ThirdOf which);

/// f at a point of an edge that is either dyadic or a sub-edge third point
/// (denominator 3 * 2^m). Throws PreconditionError for any other position.
Rational eval_point(const BoundaryValues& bv, const EdgePoint& pt);

}  // namespace sgh
