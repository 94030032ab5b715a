#include "sgh/derivative.hpp"

#include <algorithm>
#include <numeric>

namespace sgh {

std::string_view to_string(DerivClass c) {
    switch (c) {
        case DerivClass::PlusInfinity: return "PlusInfinity";
        case DerivClass::MinusInfinity: return "MinusInfinity";
        case DerivClass::Zero: return "Zero";
    }
    return "?";
}

namespace {

DerivClass from_sign(int s) {
    if (s > 0) return DerivClass::PlusInfinity;
    if (s < 0) return DerivClass::MinusInfinity;
    return DerivClass::Zero;
}

DerivClass right_class(const BoundaryValues& cell) {
    if (cell.is_constant()) throw PreconditionError("restriction is constant to the right of the point");
    return from_sign((cell.alpha + cell.gamma - Rational(2) * cell.beta).sign());
}

DerivClass left_class(const BoundaryValues& cell) {
    if (cell.is_constant()) throw PreconditionError("restriction is constant to the left of the point");
    return from_sign((Rational(2) * cell.gamma - cell.alpha - cell.beta).sign());
}

// Corner of G_0 at position 0 / 1 of each edge.
std::uint8_t start_vertex(Edge e) { return e == Edge::Bottom ? 1 : 0; }
std::uint8_t end_vertex(Edge e) { return e == Edge::Right || e == Edge::Bottom ? 2 : 1; }

}  // namespace

JunctionDerivative junction_derivative(const BoundaryValues& bv, Edge e, const Rational& position) {
    const BoundaryValues t = relabel_to_bottom(bv, e);
    const auto d = to_dyadic(position);
    const mpz_class last = mpz_class(1) << d.m;

    JunctionDerivative out;
    if (d.k < last) out.right = right_class(cell_values(t, bottom_cell_starting_at(d.k, d.m)));
    if (d.k > 0) out.left = left_class(cell_values(t, bottom_cell_starting_at(d.k - 1, d.m)));
    return out;
}

ContourPoint ContourPoint::on_edge(Edge e, const Rational& position) {
    ContourPoint p;
    if (position.is_zero()) {
        p.vertex = start_vertex(e);
    } else if (position == Rational(1)) {
        p.vertex = end_vertex(e);
    } else {
        p.edge = e;
        p.position = position;
    }
    return p;
}

std::string ContourPoint::to_string() const {
    if (vertex) return "p" + std::to_string(*vertex);
    return std::string(sgh::to_string(edge)) + "@" + position.to_string();
}

std::vector<ZeroJunction> zero_junctions(const BoundaryValues& bv, unsigned depth) {
    if (bv.is_constant()) throw PreconditionError("zero-junction scan needs a nonconstant function");
    std::vector<ZeroJunction> found;
    for (Edge e : kAllEdges) {
        const auto row = bottom_row(relabel_to_bottom(bv, e), depth);
        const std::size_t n = row.size();
        for (std::size_t k = 0; k <= n; ++k) {
            JunctionDerivative jd;
            if (k < n) jd.right = right_class(row[k]);
            if (k > 0) jd.left = left_class(row[k - 1]);
            if (!jd.has_zero()) continue;
            auto point = ContourPoint::on_edge(e, Rational(mpz_class(static_cast<unsigned long>(k)),
                                                           mpz_class(static_cast<unsigned long>(n))));
            auto same = [&](const ZeroJunction& z) { return z.point == point; };
            auto it = std::find_if(found.begin(), found.end(), same);
            if (it == found.end()) {
                found.push_back({std::move(point), {{e, jd}}});
            } else {
                it->observations.push_back({e, jd});
            }
        }
    }
    return found;
}

std::vector<std::array<long, 3>> integer_relations(const BoundaryValues& bv, long bound) {
    if (bound < 1) throw PreconditionError("relation coefficient bound must be positive");
    std::vector<std::array<long, 3>> out;
    for (long n = 0; n <= bound; ++n) {
        for (long m = -bound; m <= bound; ++m) {
            const long k = -n - m;
            if (k < -bound || k > bound) continue;
            if (n == 0 && m <= 0) continue;  // first nonzero entry positive
            if (std::gcd(std::gcd(n, m), k) != 1) continue;
            if ((Rational(n) * bv.alpha + Rational(m) * bv.beta + Rational(k) * bv.gamma).is_zero()) {
                out.push_back({n, m, k});
            }
        }
    }
    return out;
}

}  // namespace sgh
