#include <doctest.h>

#include <random>

#include "sgh/gasket.hpp"
#include "sgh/sampling.hpp"
#include "support.hpp"

using namespace sgh;
using sgh::test::bv;
using sgh::test::parsed;

namespace {

// Closed forms written out directly, independent of the
// library's coefficient tables.
Rational f_half_power(const BoundaryValues& t, unsigned m) {
    const Rational p3 = Rational(3).pow(m), p5 = Rational(5).pow(m);
    return (p3 - Rational(1)) / (Rational(2) * p5) * t.alpha + (Rational(1) - p3 / p5) * t.beta +
           (p3 + Rational(1)) / (Rational(2) * p5) * t.gamma;
}

Rational f_l(const BoundaryValues& t, unsigned m) {
    const Rational p3 = Rational(3).pow(m + 1), p5 = Rational(5).pow(m);
    return (p5 - Rational(1)) / (Rational(5) * p5) * t.alpha +
           (p3 + Rational(4) * p5 + Rational(3)) / (Rational(10) * p5) * t.beta +
           (Rational(4) * p5 - p3 - Rational(1)) / (Rational(10) * p5) * t.gamma;
}

CellAddress random_word(std::mt19937_64& rng, std::size_t len) {
    std::vector<std::uint8_t> d(len);
    for (auto& x : d) x = static_cast<std::uint8_t>(rng() % 3);
    return CellAddress(d);
}

}  // namespace

TEST_SUITE_BEGIN("gasket");

TEST_CASE("extension rule on examples") {
    const auto m = extend_once(bv(0, 0, 1));
    CHECK(m.p12 == Rational(2, 5));
    CHECK(m.p02 == Rational(2, 5));
    CHECK(m.p01 == Rational(1, 5));
    const auto c = extend_once(bv(1, 1, 1));
    CHECK((c.p12 == Rational(1) && c.p02 == Rational(1) && c.p01 == Rational(1)));
    const auto a = extend_once(bv(1, 0, 0));
    CHECK(a.p12 == Rational(1, 5));
    CHECK(a.p02 == Rational(2, 5));
    CHECK(a.p01 == Rational(2, 5));
}

TEST_CASE("cell values on examples") {
    CHECK(cell_values(bv(0, 0, 1), CellAddress()) == bv(0, 0, 1));
    CHECK(cell_values(bv(0, 0, 1), CellAddress::parse("1")) == parsed("1/5", "0", "2/5"));
    CHECK(cell_values(bv(0, 0, 1), CellAddress::parse("12")) == parsed("6/25", "1/5", "2/5"));
    CHECK(cell_values(parsed("3/7", "-2", "5/4"), CellAddress::parse("0120")) ==
          parsed("-101/3500", "-222/4375", "-16/875"));
}

TEST_CASE("cell address parsing") {
    CHECK(CellAddress::parse("").empty());
    CHECK(CellAddress::parse("1201").depth() == 4);
    CHECK(CellAddress::parse("1212").on_bottom_edge());
    CHECK_FALSE(CellAddress::parse("1202").on_bottom_edge());
    CHECK(CellAddress::parse("12").child(0) == CellAddress::parse("120"));
    CHECK(CellAddress::parse("021").to_string() == "021");
    CHECK_THROWS_AS(CellAddress::parse("13"), ParseError);
}

TEST_CASE("composition of cell addressing") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 300; ++i) {
        const auto t = random_triple(rng);
        const auto u = random_word(rng, rng() % 5);
        const auto v = random_word(rng, rng() % 4);
        REQUIRE(cell_values(t, u + v) == cell_values(cell_values(t, u), v));
    }
}

TEST_CASE("maximum principle") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 300; ++i) {
        const auto t = random_triple(rng);
        const auto c = cell_values(t, random_word(rng, 1 + rng() % 7));
        for (const Rational* x : {&c.alpha, &c.beta, &c.gamma}) {
            REQUIRE(t.min() <= *x);
            REQUIRE(*x <= t.max());
        }
    }
}

TEST_CASE("linearity in the boundary data") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_triple(rng), t = random_triple(rng);
        const Rational k = random_rational(rng);
        const auto w = random_word(rng, 6);
        CHECK(cell_values(s + t * k, w) == cell_values(s, w) + cell_values(t, w) * k);
    }
}

TEST_CASE("dyadic evaluation") {
    CHECK(eval_bottom(bv(0, 0, 1), Rational(0)) == Rational(0));
    CHECK(eval_bottom(bv(0, 0, 1), Rational(1, 2)) == Rational(2, 5));
    CHECK(eval_bottom(bv(0, 0, 1), Rational(1, 4)) == Rational(1, 5));
    CHECK(eval_bottom(bv(0, 0, 1), Rational(1)) == Rational(1));
    const auto t = parsed("3/7", "-2", "5/4");
    CHECK(eval_bottom(t, Rational(5, 8)) == Rational(547, 3500));
    CHECK(eval_bottom(t, Rational(13, 16)) == Rational(1601, 2500));
    CHECK(eval_dyadic(t, {Edge::Left, Rational(3, 4)}) == Rational(-174, 175));
    CHECK(eval_dyadic(t, {Edge::Right, Rational(1, 8)}) == Rational(67, 250));
    CHECK(eval_dyadic(t, {Edge::Left, Rational(0)}) == t.alpha);
    CHECK(eval_dyadic(t, {Edge::Left, Rational(1)}) == t.beta);
    CHECK(eval_dyadic(t, {Edge::Right, Rational(1)}) == t.gamma);
    CHECK_THROWS_AS(eval_bottom(t, Rational(1, 3)), PreconditionError);
    CHECK_THROWS_AS(eval_bottom(t, Rational(3, 2)), PreconditionError);
    CHECK_THROWS_AS(eval_bottom(t, Rational(-1, 4)), PreconditionError);
}

TEST_CASE("a shared junction gets the same value from both adjacent cells") {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 50; ++i) {
        const auto t = random_triple(rng);
        const unsigned m = 1 + rng() % 8;
        const auto row = bottom_row(t, m);
        for (std::size_t k = 1; k < row.size(); ++k) REQUIRE(row[k - 1].gamma == row[k].beta);
        const auto samples = sample_bottom(t, m);
        REQUIRE(samples.size() == row.size() + 1);
        for (std::size_t k = 0; k < row.size(); ++k) {
            REQUIRE(samples[k] == row[k].beta);
            REQUIRE(samples[k] == eval_bottom(t, Rational(static_cast<long>(k)) * Rational::inverse_power_of_two(m)));
        }
    }
}

TEST_CASE("edge relabeling") {
    const auto t = bv(1, 2, 3);
    CHECK(relabel_to_bottom(t, Edge::Bottom) == t);
    CHECK(relabel_to_bottom(t, Edge::Left) == bv(3, 1, 2));
    CHECK(relabel_to_bottom(t, Edge::Right) == bv(2, 1, 3));
    CHECK(parse_edge("left") == Edge::Left);
    CHECK(to_string(Edge::Right) == "right");
    CHECK_THROWS_AS(parse_edge("top"), ParseError);
}

TEST_CASE("left and right edges agree with interior cell addressing") {
    // Left edge [p0,p1] runs through children 0 then 1; right edge through 0 then 2.
    const auto t = parsed("3/7", "-2", "5/4");
    CHECK(eval_dyadic(t, {Edge::Left, Rational(1, 2)}) == cell_values(t, CellAddress::parse("0")).beta);
    CHECK(eval_dyadic(t, {Edge::Right, Rational(1, 2)}) == cell_values(t, CellAddress::parse("0")).gamma);
    CHECK(eval_dyadic(t, {Edge::Left, Rational(1, 4)}) == cell_values(t, CellAddress::parse("00")).beta);
    CHECK(eval_dyadic(t, {Edge::Right, Rational(3, 4)}) == cell_values(t, CellAddress::parse("20")).gamma);
}

TEST_CASE("closed forms on examples") {
    CHECK(closed_form_value(bv(0, 0, 1), 2, ClosedFormPoint::HalfPower) == Rational(1, 5));
    CHECK(closed_form_value(bv(1, 0, 0), 2, ClosedFormPoint::LeftOfMid) == Rational(24, 125));
    CHECK(closed_form_value(bv(0, 0, 1), 1, ClosedFormPoint::LeftOfMid) == Rational(1, 5));
    CHECK(closed_form_value(bv(0, 0, 1), 1, ClosedFormPoint::LeftOfMid) == eval_bottom(bv(0, 0, 1), Rational(1, 4)));
    CHECK(closed_form_position(3, ClosedFormPoint::RightOfMid) == Rational(9, 16));
    CHECK(closed_form_position(3, ClosedFormPoint::OneMinusHalfPower) == Rational(7, 8));
    CHECK_THROWS_AS(closed_form_value(bv(0, 0, 1), 0, ClosedFormPoint::HalfPower), PreconditionError);
}

TEST_CASE("closed forms match the written-out formulas and recursion") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 20; ++i) {
        const auto t = random_triple(rng);
        const BoundaryValues mirror{t.alpha, t.gamma, t.beta};
        for (unsigned m = 1; m <= 20; ++m) {
            REQUIRE(closed_form_value(t, m, ClosedFormPoint::HalfPower) == f_half_power(t, m));
            REQUIRE(closed_form_value(t, m, ClosedFormPoint::OneMinusHalfPower) == f_half_power(mirror, m));
            REQUIRE(closed_form_value(t, m, ClosedFormPoint::LeftOfMid) == f_l(t, m));
            REQUIRE(closed_form_value(t, m, ClosedFormPoint::RightOfMid) == f_l(mirror, m));
            for (auto which : {ClosedFormPoint::HalfPower, ClosedFormPoint::OneMinusHalfPower, ClosedFormPoint::LeftOfMid,
                               ClosedFormPoint::RightOfMid}) {
                REQUIRE(closed_form_value(t, m, which) == eval_bottom(t, closed_form_position(m, which)));
            }
        }
    }
}

TEST_CASE("closed-form coefficient rows sum to one") {
    for (unsigned m = 1; m <= 20; ++m) {
        for (auto which : {ClosedFormPoint::HalfPower, ClosedFormPoint::OneMinusHalfPower, ClosedFormPoint::LeftOfMid,
                           ClosedFormPoint::RightOfMid}) {
            const auto c = closed_form_coefficients(m, which);
            REQUIRE(c[0] + c[1] + c[2] == Rational(1));
        }
    }
}

TEST_CASE("normal derivative") {
    CHECK(normal_derivative(bv(1, 0, 0)) == Rational(2));
    CHECK(normal_derivative(bv(1, 1, 1)) == Rational(0));
    CHECK(normal_derivative(bv(1, 0, 2)) == Rational(0));
    std::mt19937_64 rng(127);
    for (int i = 0; i < 50; ++i) {
        const auto t = random_triple(rng);
        for (unsigned m = 1; m <= 10; ++m) {
            // Neighbours of p0 at level m are the bottom corners of cell 0^m.
            const auto c = cell_values(t, CellAddress(std::vector<std::uint8_t>(m, 0)));
            const Rational direct = Rational(5, 3).pow(m) * (Rational(2) * t.alpha - c.beta - c.gamma);
            REQUIRE(direct == normal_derivative(t));
            REQUIRE(renormalized_apex_difference(t, m) == direct);
        }
    }
}

TEST_SUITE_END();
