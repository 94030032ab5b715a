#include "sgh/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "sgh/derivative.hpp"
#include "sgh/monotonicity.hpp"
#include "sgh/oracle.hpp"
#include "sgh/sampling.hpp"
#include "sgh/third_point.hpp"

namespace sgh::verify {

namespace {

constexpr unsigned kOracleLevelCap = 4;

std::vector<BoundaryValues> triples(const Config& cfg, bool nonconstant, std::uint64_t salt) {
    if (cfg.triple) return {*cfg.triple};
    std::mt19937_64 rng(cfg.seed ^ salt);
    std::vector<BoundaryValues> out;
    out.reserve(cfg.trials);
    for (unsigned i = 0; i < cfg.trials; ++i) {
        out.push_back(nonconstant ? random_nonconstant_triple(rng) : random_triple(rng));
    }
    return out;
}

void fail(SuiteResult& r, std::string what) {
    if (!r.passed) return;
    r.passed = false;
    r.counterexample = std::move(what);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

bool strictly_increasing(const std::vector<Rational>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

bool monotone(const std::vector<Rational>& v) {
    const bool up = std::adjacent_find(v.begin(), v.end(), std::greater<>()) == v.end();
    const bool down = std::adjacent_find(v.begin(), v.end(), std::less<>()) == v.end();
    return up || down;
}

SuiteResult midpoint_test(const Config& cfg) {
    SuiteResult r;
    r.name = "midpoint-test";
    auto sample = triples(cfg, false, 1);
    if (!cfg.triple) {
        // Boundary-saturating cases alpha = 2 gamma - beta and alpha = 2 beta - gamma.
        std::mt19937_64 rng(cfg.seed ^ 11);
        for (unsigned i = 0; i < cfg.trials / 4 + 1; ++i) {
            auto bv = random_triple(rng);
            bv.alpha = (i % 2 == 0) ? Rational(2) * bv.gamma - bv.beta : Rational(2) * bv.beta - bv.gamma;
            sample.push_back(bv);
        }
    }
    for (const auto& bv : sample) {
        for (Edge e : kAllEdges) {
            const auto t = relabel_to_bottom(bv, e);
            const bool expected = t.beta < t.gamma && Rational(2) * t.beta - t.gamma <= t.alpha &&
                                  t.alpha <= Rational(2) * t.gamma - t.beta;
            if (dsv_check(bv, e) != expected) {
                fail(r, to_string(bv) + " on " + std::string(to_string(e)));
            }
        }
    }
    r.details.push_back(std::to_string(sample.size()) + " triples x 3 edges");
    return r;
}

SuiteResult edge_values(const Config& cfg) {
    SuiteResult r;
    r.name = "edge-closed-forms";
    const auto sample = triples(cfg, false, 2);
    const ClosedFormPoint kinds[] = {ClosedFormPoint::HalfPower, ClosedFormPoint::OneMinusHalfPower, ClosedFormPoint::LeftOfMid,
                                 ClosedFormPoint::RightOfMid};
    for (unsigned m = 1; m <= cfg.m_max; ++m) {
        for (auto which : kinds) {
            const auto c = closed_form_coefficients(m, which);
            if (c[0] + c[1] + c[2] != Rational(1)) fail(r, "coefficients do not sum to 1 at m=" + std::to_string(m));
        }
    }
    for (const auto& bv : sample) {
        for (unsigned m = 1; m <= cfg.m_max && r.passed; ++m) {
            for (auto which : kinds) {
                if (closed_form_value(bv, m, which) != eval_bottom(bv, closed_form_position(m, which))) {
                    fail(r, to_string(bv) + " m=" + std::to_string(m) + " at " +
                                closed_form_position(m, which).to_string());
                }
            }
        }
    }
    r.details.push_back(std::to_string(sample.size()) + " triples, m <= " + std::to_string(cfg.m_max));
    return r;
}

SuiteResult conservation(const Config& cfg) {
    SuiteResult r;
    r.name = "conservation";
    const auto sample = triples(cfg, false, 3);
    for (const auto& bv : sample) {
        const Rational c = Rational(5) * bv.alpha + Rational(15) * bv.beta + Rational(7) * bv.gamma;
        for (unsigned m = 1; m <= cfg.m_max; ++m) {
            const auto t = triangle_sequence(bv, m);
            if (Rational(5) * t.alpha_m + Rational(15) * t.beta_m + Rational(7) * t.gamma_m != c) {
                fail(r, to_string(bv) + " m=" + std::to_string(m));
                break;
            }
        }
    }
    r.details.push_back(std::to_string(sample.size()) + " triples, m <= " + std::to_string(cfg.m_max));
    return r;
}

SuiteResult sequence_closed_form(const Config& cfg) {
    SuiteResult r;
    r.name = "third-point-closed-form";
    const auto sample = triples(cfg, false, 4);
    for (const auto& bv : sample) {
        for (unsigned m = 0; m <= cfg.m_max; ++m) {
            const auto t = triangle_sequence(bv, m);
            const auto g = gamma_closed_form_exact(bv, m);
            const auto b = beta_closed_form_exact(bv, m);
            if (!g.is_rational() || !b.is_rational() || g.rational_part() != t.gamma_m ||
                b.rational_part() != t.beta_m) {
                fail(r, to_string(bv) + " m=" + std::to_string(m));
                break;
            }
        }
    }
    r.details.push_back(std::to_string(sample.size()) + " triples, m <= " + std::to_string(cfg.m_max));
    return r;
}

SuiteResult monotonicity(const Config& cfg) {
    SuiteResult r;
    r.name = "monotonicity";
    const auto sample = triples(cfg, true, 5);
    unsigned strict = 0;
    unsigned nonmono = 0;
    for (const auto& bv : sample) {
        const auto cls = classify_bottom(bv);
        if (cls == MonotonicityClass::StrictlyIncreasing || cls == MonotonicityClass::StrictlyDecreasing) {
            auto v = sample_bottom(bv, 10);
            if (cls == MonotonicityClass::StrictlyDecreasing) std::reverse(v.begin(), v.end());
            if (!strictly_increasing(v)) fail(r, to_string(bv) + " classified strict but samples are not");
            ++strict;
        } else if (cls == MonotonicityClass::NonMonotone) {
            const Rational lo = Rational(2) * bv.beta - bv.gamma - bv.alpha;
            const Rational hi = bv.alpha - Rational(2) * bv.gamma + bv.beta;
            if (lo.abs() < Rational(1) || hi.abs() < Rational(1)) continue;
            if (monotone(sample_bottom(bv, 12))) fail(r, to_string(bv) + " classified non-monotone but samples are");
            ++nonmono;
        }
    }
    r.details.push_back(std::to_string(strict) + " strict, " + std::to_string(nonmono) +
                        " non-monotone (margin >= 1) checked");
    return r;
}

SuiteResult simultaneous(const Config& cfg) {
    SuiteResult r;
    r.name = "simultaneous";
    const auto sample = triples(cfg, true, 6);
    for (const auto& bv : sample) {
        const bool all_strict = std::all_of(kAllEdges.begin(), kAllEdges.end(),
                                            [&](Edge e) { return is_strict(classify_edge(bv, e)); });
        if (simultaneous_monotone(bv) != all_strict) fail(r, to_string(bv));
    }
    r.details.push_back(std::to_string(sample.size()) + " triples");
    return r;
}

SuiteResult zero_junction_count(const Config& cfg) {
    SuiteResult r;
    r.name = "zero-junctions";
    auto sample = triples(cfg, true, 7);
    std::size_t max_count = 0;
    for (const auto& bv : sample) {
        const auto z = zero_junctions(bv, cfg.depth);
        max_count = std::max(max_count, z.size());
        if (z.size() > 1) fail(r, to_string(bv) + " has " + std::to_string(z.size()) + " zero junctions");
    }
    if (!cfg.triple) {
        // Triples on one vertex relation: the single zero sits on that vertex.
        std::mt19937_64 rng(cfg.seed ^ 77);
        for (unsigned i = 0; i < cfg.trials; ++i) {
            auto bv = random_nonconstant_triple(rng);
            const std::uint8_t vertex = i % 3;
            Rational* target = vertex == 0 ? &bv.alpha : (vertex == 1 ? &bv.beta : &bv.gamma);
            *target = (bv.delta() - *target) / Rational(2);
            if (bv.is_constant()) continue;
            const auto z = zero_junctions(bv, cfg.depth);
            if (z.size() != 1 || z.front().point.vertex != vertex) {
                fail(r, to_string(bv) + " should vanish only at p" + std::to_string(vertex));
            }
        }
    }
    r.details.push_back("max zero-count " + std::to_string(max_count) + " over " + std::to_string(sample.size()) +
                        " triples at depth " + std::to_string(cfg.depth));
    return r;
}

SuiteResult third_point_quotients(const Config& cfg) {
    SuiteResult r;
    r.name = "third-point-quotients";
    const auto sample = triples(cfg, true, 8);
    const QuadExt four(Rational(4));
    for (const auto& bv : sample) {
        const auto ctx = ThirdPointContext::from(bv);
        const QuadExt envelope_right = QuadExt(Rational(3, 2)) * (ctx.A.abs() + ctx.B.abs());
        const QuadExt envelope_left = QuadExt(Rational(3)) * (ctx.beta_A.abs() + ctx.beta_B.abs());
        const QuadExt rate = four * ctx.s;
        QuadExt rate_m(Rational(1));
        for (unsigned m = 1; m <= cfg.m_max && r.passed; ++m) {
            rate_m *= rate;
            for (Side side : {Side::Left, Side::Right}) {
                const Rational q = third_point_quotient(bv, m, side);
                const QuadExt closed = third_point_quotient_closed_form(bv, m, side);
                const QuadExt bound = (side == Side::Right ? envelope_right : envelope_left) * rate_m;
                if (QuadExt(q) != closed) {
                    fail(r, to_string(bv) + " quotient differs from closed form at m=" + std::to_string(m));
                } else if (QuadExt(q.abs()) > bound) {
                    fail(r, to_string(bv) + " quotient exceeds (4s)^m envelope at m=" + std::to_string(m));
                }
            }
        }
    }
    r.details.push_back("4s = " + fmt((four * ThirdPointContext::from({}).s).to_double()) + " < 1");
    const BoundaryValues shown = cfg.triple ? *cfg.triple : BoundaryValues{Rational(0), Rational(0), Rational(1)};
    r.details.push_back("m  |left quotient|  |right quotient|  for " + to_string(shown));
    for (unsigned m = 1; m <= cfg.m_max; ++m) {
        r.details.push_back(std::to_string(m) + "  " + fmt(third_point_quotient(shown, m, Side::Left).abs().to_double()) +
                            "  " + fmt(third_point_quotient(shown, m, Side::Right).abs().to_double()));
    }
    return r;
}

SuiteResult oracle(const Config& cfg) {
    SuiteResult r;
    r.name = "oracle";
    const unsigned top = std::clamp(cfg.depth, 1U, kOracleLevelCap);
    if (top != cfg.depth) r.details.push_back("level clamped to " + std::to_string(top));
    const auto sample = triples(cfg, false, 9);
    for (unsigned m = 1; m <= top; ++m) {
        const auto graph = GasketGraph::build(m);
        for (const auto& bv : sample) {
            const auto solved = solve_harmonic(graph, bv);
            if (solved != extension_values(graph, bv)) {
                fail(r, to_string(bv) + " solver and extension differ at level " + std::to_string(m));
            } else if (!check_five_point(graph, solved)) {
                fail(r, to_string(bv) + " violates the five-point relation at level " + std::to_string(m));
            }
        }
    }
    r.details.push_back(std::to_string(sample.size()) + " triples, levels 1.." + std::to_string(top));
    return r;
}

SuiteResult normal(const Config& cfg) {
    SuiteResult r;
    r.name = "normal";
    const auto sample = triples(cfg, false, 10);
    for (const auto& bv : sample) {
        const Rational nd = normal_derivative(bv);
        for (unsigned m = 1; m <= 10; ++m) {
            if (renormalized_apex_difference(bv, m) != nd) {
                fail(r, to_string(bv) + " m=" + std::to_string(m));
                break;
            }
        }
    }
    r.details.push_back(std::to_string(sample.size()) + " triples, m = 1..10");
    return r;
}

using SuiteFn = SuiteResult (*)(const Config&);

struct Entry {
    std::string_view name;
    SuiteFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries{
        {"midpoint-test", midpoint_test},
        {"edge-closed-forms", edge_values},
        {"conservation", conservation},
        {"third-point-closed-form", sequence_closed_form},
        {"monotonicity", monotonicity},
        {"simultaneous", simultaneous},
        {"zero-junctions", zero_junction_count},
        {"third-point-quotients", third_point_quotients},
        {"oracle", oracle},
        {"normal", normal},
    };
    return entries;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> v;
        for (const auto& e : registry()) v.push_back(e.name);
        return v;
    }();
    return names;
}

SuiteResult run(std::string_view name, const Config& config) {
    for (const auto& e : registry()) {
        if (e.name == name) return e.fn(config);
    }
    throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all(const Config& config) {
    std::vector<SuiteResult> out;
    for (const auto& e : registry()) out.push_back(e.fn(config));
    return out;
}

}  // namespace sgh::verify
