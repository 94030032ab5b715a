#include "sgh/third_point.hpp"

#include <stdexcept>

namespace sgh {

ThirdPointContext ThirdPointContext::from(const BoundaryValues& bv) {
    ThirdPointContext x;
    const QuadExt one(Rational(1));
    const QuadExt root13 = QuadExt::root13();
    x.c = Rational(5) * bv.alpha + Rational(15) * bv.beta + Rational(7) * bv.gamma;
    x.u = Rational(10);
    x.v = one - root13;
    x.s = (QuadExt(Rational(7)) + root13) / QuadExt(Rational(50));
    x.h = (x.v + QuadExt(Rational(6))) / QuadExt(Rational(50));
    x.w = (QuadExt(Rational(9)) - root13) * QuadExt(x.c / Rational(25));
    x.t0 = QuadExt(Rational(10) * bv.beta) + x.v * QuadExt(bv.gamma);
    x.l = QuadExt(x.c / Rational(25)) + x.w / (QuadExt(Rational(50)) * (x.s - one));
    x.k = -(x.w / (x.s - one) + x.t0) / QuadExt(Rational(50));
    x.B = x.k / (x.s - x.h);
    x.A = x.l / (x.h - one) - x.B + QuadExt(bv.gamma);
    const QuadExt u(x.u);
    x.beta_B = (x.w / (x.s - one) - x.v * x.B + x.t0) / u;
    x.beta_A = -(x.v / u) * x.A;
    return x;
}

Rational third_point_value(const BoundaryValues& bv) {
    return (Rational(5) * bv.alpha + Rational(15) * bv.beta + Rational(7) * bv.gamma) / Rational(27);
}

Rational two_thirds_point_value(const BoundaryValues& bv) {
    return (Rational(5) * bv.alpha + Rational(7) * bv.beta + Rational(15) * bv.gamma) / Rational(27);
}

TriangleSequence triangle_sequence(const BoundaryValues& bv, unsigned m) {
    TriangleSequence t{0, bv.alpha, bv.beta, bv.gamma, Rational(0), Rational(1)};
    for (unsigned i = 1; i <= m; ++i) {
        const Rational a = t.alpha_m;
        const Rational b = t.beta_m;
        const Rational g = t.gamma_m;
        t.alpha_m = (Rational(6) * a + Rational(13) * b + Rational(6) * g) / Rational(25);
        t.beta_m = (Rational(4) * a + Rational(16) * b + Rational(5) * g) / Rational(25);
        t.gamma_m = (a + Rational(2) * b + Rational(2) * g) / Rational(5);
    }
    const Rational quarter_m = Rational(1, 4).pow(m);
    t.m = m;
    t.p1_m = Rational(1, 3) - Rational(1, 3) * quarter_m;
    t.p2_m = Rational(1, 3) + Rational(2, 3) * quarter_m;
    return t;
}

QuadExt gamma_closed_form_exact(const BoundaryValues& bv, unsigned m) {
    const auto x = ThirdPointContext::from(bv);
    return x.A * x.h.pow(m) + x.B * x.s.pow(m) + QuadExt(x.c / Rational(27));
}

QuadExt beta_closed_form_exact(const BoundaryValues& bv, unsigned m) {
    const auto x = ThirdPointContext::from(bv);
    return x.beta_A * x.h.pow(m) + x.beta_B * x.s.pow(m) + QuadExt(x.c / Rational(27));
}

namespace {

Rational rational_or_throw(const QuadExt& q, const char* what) {
    if (!q.is_rational()) {
        throw std::logic_error(std::string(what) + " closed form left a sqrt13 part: " + q.to_string());
    }
    return q.rational_part();
}

}  // namespace

Rational gamma_closed_form(const BoundaryValues& bv, unsigned m) {
    return rational_or_throw(gamma_closed_form_exact(bv, m), "gamma_m");
}

Rational beta_closed_form(const BoundaryValues& bv, unsigned m) {
    return rational_or_throw(beta_closed_form_exact(bv, m), "beta_m");
}

Rational third_point_quotient(const BoundaryValues& bv, unsigned m, Side side) {
    const auto t = triangle_sequence(bv, m);
    const Rational f_third = third_point_value(bv);
    const Rational third(1, 3);
    if (side == Side::Right) return (t.gamma_m - f_third) / (t.p2_m - third);
    return (t.beta_m - f_third) / (t.p1_m - third);
}

QuadExt third_point_quotient_closed_form(const BoundaryValues& bv, unsigned m, Side side) {
    const auto x = ThirdPointContext::from(bv);
    const QuadExt four(Rational(4));
    const QuadExt hm = (four * x.h).pow(m);
    const QuadExt sm = (four * x.s).pow(m);
    if (side == Side::Right) return QuadExt(Rational(3, 2)) * (x.A * hm + x.B * sm);
    return QuadExt(Rational(-3)) * (x.beta_A * hm + x.beta_B * sm);
}

PointValue third_point_of_subedge(const BoundaryValues& bv, const CellAddress& addr, ThirdOf which) {
    if (!addr.on_bottom_edge()) {
        throw PreconditionError("cell '" + addr.to_string() + "' does not sit on the bottom edge");
    }
    mpz_class k = 0;
    for (auto d : addr.digits()) k = 2 * k + (d == 2 ? 1 : 0);
    const mpz_class offset = which == ThirdOf::OneThird ? 1 : 2;
    mpz_class den = mpz_class(3) << addr.depth();
    const BoundaryValues cell = cell_values(bv, addr);
    Rational value = which == ThirdOf::OneThird ? third_point_value(cell) : two_thirds_point_value(cell);
    return {Rational(mpz_class(3 * k + offset), std::move(den)), std::move(value)};
}

Rational eval_point(const BoundaryValues& bv, const EdgePoint& pt) {
    const Rational& x = pt.position;
    if (x < Rational(0) || x > Rational(1)) {
        throw PreconditionError("edge position " + x.to_string() + " outside [0,1]");
    }
    if (x.dyadic_exponent() >= 0) return eval_dyadic(bv, pt);

    // Denominator 3 * 2^m: the point is a third point of a depth-m cell.
    const mpz_class& den = x.denominator();
    if (den % 3 != 0) {
        throw PreconditionError("unsupported point " + x.to_string() +
                                " (need k/2^m or a sub-edge third point with denominator 3*2^m)");
    }
    const long m = Rational(mpz_class(1), den / 3).dyadic_exponent();
    if (m < 0) {
        throw PreconditionError("unsupported point " + x.to_string() +
                                " (need k/2^m or a sub-edge third point with denominator 3*2^m)");
    }
    const mpz_class& num = x.numerator();
    const mpz_class r = num % 3;
    const mpz_class k = (num - r) / 3;
    const auto addr = bottom_cell_starting_at(k, static_cast<unsigned>(m));
    const BoundaryValues cell = cell_values(relabel_to_bottom(bv, pt.edge), addr);
    return r == 1 ? third_point_value(cell) : two_thirds_point_value(cell);
}

}  // namespace sgh
