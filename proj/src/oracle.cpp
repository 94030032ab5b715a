#include "sgh/oracle.hpp"

#include <algorithm>

#include "sgh/linear_solve.hpp"

namespace sgh {

std::size_t expected_vertex_count(unsigned m) {
    std::size_t p = 1;
    for (unsigned i = 0; i < m; ++i) p *= 3;
    return 3 * (p + 1) / 2;
}

VertexId GasketGraph::intern(const GraphPoint& p) {
    auto [it, inserted] = index_.try_emplace(p, points_.size());
    if (inserted) points_.push_back(p);
    return it->second;
}

VertexId GasketGraph::find(const GraphPoint& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw PreconditionError("point is not a vertex of G_" + std::to_string(level_));
    return it->second;
}

GasketGraph GasketGraph::build(unsigned m) {
    if (m > kMaxGraphLevel) {
        throw PreconditionError("graph level " + std::to_string(m) + " exceeds " + std::to_string(kMaxGraphLevel));
    }
    GasketGraph g;
    g.level_ = m;
    const VertexId p0 = g.intern({Rational(0), Rational(1)});
    const VertexId p1 = g.intern({Rational(0), Rational(0)});
    const VertexId p2 = g.intern({Rational(1), Rational(0)});
    g.cells_.push_back({CellAddress(), {p0, p1, p2}});

    const Rational half(1, 2);
    auto midpoint = [&](VertexId a, VertexId b) {
        const GraphPoint pa = g.points_[a];
        const GraphPoint pb = g.points_[b];
        return g.intern({(pa.x + pb.x) * half, (pa.y + pb.y) * half});
    };

    for (unsigned level = 0; level < m; ++level) {
        std::vector<GraphCell> next;
        next.reserve(g.cells_.size() * 3);
        for (const auto& cell : g.cells_) {
            const auto [v0, v1, v2] = cell.vertex;
            const VertexId m12 = midpoint(v1, v2);
            const VertexId m02 = midpoint(v0, v2);
            const VertexId m01 = midpoint(v0, v1);
            g.triangles_.push_back({level, {v0, v1, v2}, {m12, m02, m01}});
            next.push_back({cell.address.child(0), {v0, m01, m02}});
            next.push_back({cell.address.child(1), {m01, v1, m12}});
            next.push_back({cell.address.child(2), {m02, m12, v2}});
        }
        g.cells_ = std::move(next);
    }

    g.adjacency_.assign(g.points_.size(), {});
    for (const auto& cell : g.cells_) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i != j) g.adjacency_[cell.vertex[i]].push_back(cell.vertex[j]);
            }
        }
    }
    for (auto& nb : g.adjacency_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

std::vector<Rational> solve_harmonic(const GasketGraph& graph, const BoundaryValues& bv) {
    const std::size_t n = graph.vertex_count();
    const std::array<Rational, 3> fixed{bv.alpha, bv.beta, bv.gamma};

    // Unknowns are the non-boundary vertices 3..n-1.
    const std::size_t unknowns = n - 3;
    std::vector<Rational> values(fixed.begin(), fixed.end());
    if (unknowns == 0) return values;

    RationalMatrix a(unknowns, unknowns);
    std::vector<Rational> rhs(unknowns);
    for (VertexId v = 3; v < n; ++v) {
        const std::size_t row = v - 3;
        const auto& nb = graph.neighbours(v);
        if (nb.size() != 4) throw Error("junction vertex without exactly four neighbours");
        a(row, row) = Rational(4);
        for (VertexId u : nb) {
            if (graph.is_boundary(u)) {
                rhs[row] += fixed[u];
            } else {
                a(row, u - 3) -= Rational(1);
            }
        }
    }
    auto x = solve_exact(std::move(a), std::move(rhs));
    values.insert(values.end(), std::make_move_iterator(x.begin()), std::make_move_iterator(x.end()));
    return values;
}

HarmonicSolution solve_harmonic(unsigned m, const BoundaryValues& bv) {
    if (m < 1) throw PreconditionError("solve_harmonic needs m >= 1");
    auto graph = GasketGraph::build(m);
    auto values = solve_harmonic(graph, bv);
    return {std::move(graph), std::move(values)};
}

bool check_five_point(const GasketGraph& graph, const std::vector<Rational>& values) {
    if (values.size() != graph.vertex_count()) {
        throw PreconditionError("expected " + std::to_string(graph.vertex_count()) + " vertex values, got " +
                                std::to_string(values.size()));
    }
    const Rational four(4);
    for (const auto& t : graph.midpoint_triangles()) {
        const auto& f = values;
        const auto [v0, v1, v2] = t.vertex;
        const auto [m12, m02, m01] = t.midpoint;
        if (f[v0] + f[v1] + f[m02] + f[m12] != four * f[m01]) return false;
        if (f[v0] + f[v2] + f[m01] + f[m12] != four * f[m02]) return false;
        if (f[v1] + f[v2] + f[m01] + f[m02] != four * f[m12]) return false;
    }
    return true;
}

std::vector<Rational> extension_values(const GasketGraph& graph, const BoundaryValues& bv) {
    std::vector<Rational> values(graph.vertex_count());
    for (const auto& cell : graph.cells()) {
        const BoundaryValues cv = cell_values(bv, cell.address);
        values[cell.vertex[0]] = cv.alpha;
        values[cell.vertex[1]] = cv.beta;
        values[cell.vertex[2]] = cv.gamma;
    }
    return values;
}

}  // namespace sgh
