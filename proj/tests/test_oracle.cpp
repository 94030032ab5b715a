#include <doctest.h>

#include <random>

#include "sgh/linear_solve.hpp"
#include "sgh/oracle.hpp"
#include "sgh/sampling.hpp"
#include "support.hpp"

using namespace sgh;
using sgh::test::bv;
using sgh::test::parsed;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("exact solver") {
    RationalMatrix a(2, 2);
    a(0, 0) = Rational(0);
    a(0, 1) = Rational(2);
    a(1, 0) = Rational(3);
    a(1, 1) = Rational(1);
    const auto x = solve_exact(a, {Rational(4), Rational(5)});
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(2));

    RationalMatrix s(2, 2);
    s(0, 0) = Rational(1);
    s(0, 1) = Rational(2);
    s(1, 0) = Rational(2);
    s(1, 1) = Rational(4);
    CHECK_THROWS_AS(solve_exact(s, {Rational(1), Rational(2)}), SingularSystem);
}

TEST_CASE("solver on random systems") {
    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        RationalMatrix a(n, n);
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = random_rational(rng);
            for (std::size_t j = 0; j < n; ++j) a(i, j) = (rng() % 3 == 0) ? Rational(0) : random_rational(rng, 9, 9);
            a(i, i) += Rational(1000);
        }
        std::vector<Rational> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) b[i] += a(i, j) * x[j];
        }
        REQUIRE(solve_exact(a, b) == x);
    }
}

TEST_CASE("graph structure") {
    for (unsigned m = 0; m <= 5; ++m) {
        const auto g = GasketGraph::build(m);
        REQUIRE(g.vertex_count() == expected_vertex_count(m));
        std::size_t cells = 1;
        for (unsigned i = 0; i < m; ++i) cells *= 3;
        REQUIRE(g.cells().size() == cells);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            REQUIRE(g.neighbours(v).size() == (g.is_boundary(v) ? 2u : 4u));
        }
    }
    CHECK(expected_vertex_count(1) == 6);
    CHECK(expected_vertex_count(2) == 15);
    const auto g = GasketGraph::build(2);
    CHECK(g.point(0) == GraphPoint{Rational(0), Rational(1)});
    CHECK(g.point(1) == GraphPoint{Rational(0), Rational(0)});
    CHECK(g.point(2) == GraphPoint{Rational(1), Rational(0)});
    CHECK(g.find(GraphPoint{Rational(1, 4), Rational(0)}) < g.vertex_count());
    CHECK_THROWS_AS(GasketGraph::build(kMaxGraphLevel + 1), PreconditionError);
}

TEST_CASE("harmonic solve matches the extension algorithm") {
    std::mt19937_64 rng(509);
    for (unsigned m = 1; m <= 3; ++m) {
        const auto g = GasketGraph::build(m);
        for (int i = 0; i < 10; ++i) {
            const auto t = random_triple(rng);
            const auto solved = solve_harmonic(g, t);
            REQUIRE(solved == extension_values(g, t));
            REQUIRE(check_five_point(g, solved));
        }
    }
    CHECK_THROWS_AS(solve_harmonic(0, bv(0, 0, 1)), PreconditionError);
}

TEST_CASE("bottom-edge vertices carry the dyadic values") {
    const auto t = parsed("3/7", "-2", "5/4");
    const auto sol = solve_harmonic(3, t);
    for (long k = 0; k <= 8; ++k) {
        const auto v = sol.graph.find(GraphPoint{Rational(k, 8), Rational(0)});
        CHECK(sol.values[v] == eval_bottom(t, Rational(k, 8)));
    }
    // Left edge runs from p0 = (0,1) to p1 = (0,0).
    const auto v = sol.graph.find(GraphPoint{Rational(0), Rational(1, 4)});
    CHECK(sol.values[v] == eval_dyadic(t, {Edge::Left, Rational(3, 4)}));
}

TEST_CASE("five-point check rejects a perturbed solution") {
    const auto g = GasketGraph::build(2);
    auto values = extension_values(g, bv(0, 0, 1));
    CHECK(check_five_point(g, values));
    values[5] += Rational(1, 1000);
    CHECK_FALSE(check_five_point(g, values));
    values.pop_back();
    CHECK_THROWS_AS(check_five_point(g, values), PreconditionError);
}

TEST_SUITE_END();
