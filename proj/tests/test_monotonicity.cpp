#include <doctest.h>

#include <random>

#include "sgh/monotonicity.hpp"
#include "sgh/sampling.hpp"
#include "support.hpp"

using namespace sgh;
using sgh::test::bv;

namespace {

// Triples on the boundary hyperplanes alpha = 2 gamma - beta or 2 beta - gamma.
BoundaryValues saturating(std::mt19937_64& rng) {
    const Rational b = random_rational(rng), g = random_rational(rng);
    const Rational a = (rng() & 1) ? Rational(2) * g - b : Rational(2) * b - g;
    return {a, b, g};
}

}  // namespace

TEST_SUITE_BEGIN("monotonicity");

TEST_CASE("classification examples") {
    CHECK(classify_bottom(bv(1, 0, 2)) == MonotonicityClass::StrictlyIncreasing);
    CHECK(classify_bottom(bv(5, 0, 1)) == MonotonicityClass::NonMonotone);
    CHECK(classify_bottom(bv(0, 0, 0)) == MonotonicityClass::Constant);
    CHECK(classify_bottom(bv(2, 0, 1)) == MonotonicityClass::StrictlyIncreasing);
    CHECK(classify_bottom(bv(-1, 0, 1)) == MonotonicityClass::StrictlyIncreasing);
    CHECK(classify_bottom(bv(1, 2, 0)) == MonotonicityClass::StrictlyDecreasing);
    CHECK(classify_bottom(bv(1, 0, 0)) == MonotonicityClass::NonMonotone);
    CHECK(classify_edge(bv(0, 0, 1), Edge::Left) == MonotonicityClass::NonMonotone);
    CHECK(classify_edge(bv(0, 1, 0), Edge::Left) == MonotonicityClass::StrictlyIncreasing);
    CHECK(classify_edge(bv(1, 0, 0), Edge::Right) == MonotonicityClass::StrictlyDecreasing);
    CHECK(to_string(MonotonicityClass::NonMonotone) == "NonMonotone");
}

TEST_CASE("dsv check examples") {
    CHECK(dsv_check(bv(1, 0, 2), Edge::Bottom));
    CHECK_FALSE(dsv_check(bv(5, 0, 1), Edge::Bottom));
    CHECK_FALSE(dsv_check(bv(0, 0, 0), Edge::Bottom));
    CHECK(dsv_check(bv(2, 0, 1), Edge::Bottom));
}

TEST_CASE("dsv check is the between condition with beta < gamma") {
    std::mt19937_64 rng(211);
    for (int i = 0; i < 3000; ++i) {
        const auto t = (i % 3 == 0) ? saturating(rng) : random_triple(rng, 20, 6);
        for (Edge e : kAllEdges) {
            const auto r = relabel_to_bottom(t, e);
            const bool direct = r.beta < r.gamma && Rational(2) * r.beta - r.gamma <= r.alpha &&
                                r.alpha <= Rational(2) * r.gamma - r.beta;
            REQUIRE(dsv_check(t, e) == direct);
        }
    }
}

TEST_CASE("classification agrees with dense sampling") {
    std::mt19937_64 rng(223);
    for (int i = 0; i < 300; ++i) {
        const auto t = (i % 4 == 0) ? saturating(rng) : random_triple(rng, 10, 4);
        const auto samples = sample_bottom(t, 8);
        switch (classify_bottom(t)) {
            case MonotonicityClass::StrictlyIncreasing: REQUIRE(test::strictly_increasing(samples)); break;
            case MonotonicityClass::StrictlyDecreasing: REQUIRE(test::strictly_decreasing(samples)); break;
            case MonotonicityClass::Constant: REQUIRE(t.is_constant()); break;
            case MonotonicityClass::NonMonotone:
                // A miss at depth 8 is possible only very close to a hyperplane.
                if (!test::monotone(samples)) break;
                REQUIRE(!test::monotone(sample_bottom(t, 16)));
                break;
        }
    }
}

TEST_CASE("between condition matches the explicit inequalities") {
    std::mt19937_64 rng(227);
    for (int i = 0; i < 2000; ++i) {
        const auto t = (i % 3 == 0) ? saturating(rng) : random_triple(rng, 20, 6);
        const Rational lo = sgh::min(Rational(2) * t.beta - t.gamma, Rational(2) * t.gamma - t.beta);
        const Rational hi = sgh::max(Rational(2) * t.beta - t.gamma, Rational(2) * t.gamma - t.beta);
        REQUIRE(between_condition(t, Edge::Bottom) == (lo <= t.alpha && t.alpha <= hi));
    }
}

TEST_CASE("simultaneous monotonicity") {
    CHECK(simultaneous_monotone(bv(1, 0, 2)));
    CHECK_FALSE(simultaneous_monotone(bv(0, 0, 1)));
    CHECK(simultaneous_monotone(bv(0, 1, 2)));
    CHECK_THROWS_AS(simultaneous_monotone(bv(3, 3, 3)), PreconditionError);
    std::mt19937_64 rng(229);
    for (int i = 0; i < 2000; ++i) {
        auto t = random_nonconstant_triple(rng, 10, 3);
        if (i % 4 == 0) t.alpha = (t.beta + t.gamma) / Rational(2);
        if (t.is_constant()) continue;
        bool all_strict = true;
        for (Edge e : kAllEdges) all_strict = all_strict && is_strict(classify_edge(t, e));
        REQUIRE(simultaneous_monotone(t) == all_strict);
    }
}

TEST_CASE("side lengths") {
    const auto s = side_lengths(bv(0, 3, 1));
    CHECK(s.left == Rational(3));
    CHECK(s.right == Rational(1));
    CHECK(s.bottom == Rational(2));
    CHECK(s.descending == std::array<Edge, 3>{Edge::Left, Edge::Bottom, Edge::Right});
    CHECK(s.of(Edge::Bottom) == Rational(2));
    const auto tie = side_lengths(bv(0, 1, 1));
    CHECK(tie.descending == std::array<Edge, 3>{Edge::Left, Edge::Right, Edge::Bottom});
}

TEST_CASE("the two longest sides are strictly monotone") {
    std::mt19937_64 rng(233);
    for (int i = 0; i < 1000; ++i) {
        const auto t = random_nonconstant_triple(rng, 10, 3);
        const auto s = side_lengths(t);
        REQUIRE(is_strict(classify_edge(t, s.descending[0])));
        REQUIRE(is_strict(classify_edge(t, s.descending[1])));
    }
}

TEST_CASE("extremum examples") {
    const auto one = locate_extremum(bv(5, 0, 1), Edge::Bottom, 1);
    REQUIRE_FALSE(one.at_junction());
    CHECK(std::get<DyadicInterval>(one.where) == DyadicInterval{Rational(1, 2), Rational(1)});
    CHECK(one.kind == ExtremumKind::Maximum);
    CHECK(to_string(one.kind) == "max");

    const auto four = locate_extremum(bv(5, 0, 1), Edge::Bottom, 4);
    CHECK(std::get<DyadicInterval>(four.where) == DyadicInterval{Rational(5, 8), Rational(11, 16)});
    CHECK(four.trace.size() == 5);

    CHECK_THROWS_AS(locate_extremum(bv(1, 0, 2), Edge::Bottom, 3), PreconditionError);
    CHECK_THROWS_AS(locate_extremum(bv(5, 0, 1), Edge::Bottom, 0), PreconditionError);
}

TEST_CASE("extremum at a junction") {
    // Symmetric about 1/2: alpha large with beta = gamma.
    const auto loc = locate_extremum(bv(1, 0, 0), Edge::Bottom, 5);
    REQUIRE(loc.at_junction());
    CHECK(std::get<ExtremumAtJunction>(loc.where).position == Rational(1, 2));
    CHECK(loc.kind == ExtremumKind::Maximum);
    const auto low = locate_extremum(bv(-1, 0, 0), Edge::Bottom, 5);
    CHECK(low.kind == ExtremumKind::Minimum);
}

TEST_CASE("bracket contains the sampled extremum") {
    std::mt19937_64 rng(239);
    int checked = 0;
    while (checked < 150) {
        const auto t = random_triple(rng, 20, 5);
        const Edge e = kAllEdges[rng() % 3];
        if (classify_edge(t, e) != MonotonicityClass::NonMonotone) continue;
        ++checked;
        const auto loc = locate_extremum(t, e, 6);
        const auto r = relabel_to_bottom(t, e);
        const auto samples = sample_bottom(r, 10);
        std::size_t best = 0;
        for (std::size_t k = 1; k < samples.size(); ++k) {
            const bool better = loc.kind == ExtremumKind::Maximum ? samples[best] < samples[k] : samples[k] < samples[best];
            if (better) best = k;
        }
        const Rational x = Rational(static_cast<long>(best)) * Rational::inverse_power_of_two(10);
        if (loc.at_junction()) {
            REQUIRE(x == std::get<ExtremumAtJunction>(loc.where).position);
        } else {
            const auto& iv = std::get<DyadicInterval>(loc.where);
            REQUIRE(iv.width() == Rational::inverse_power_of_two(6));
            REQUIRE(iv.lo <= x);
            REQUIRE(x <= iv.hi);
        }
    }
}

TEST_SUITE_END();
