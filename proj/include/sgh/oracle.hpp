#pragma once

/**
 * Independent check of the extension algorithm: build the graph G_m with
 * exact coordinates and solve the discrete harmonicity conditions as a
 * linear system.
 *
 * Coordinates are affine pairs (x, y) with p1 = (0,0), p2 = (1,0) and
 * p0 = (0,1); every vertex of G_m has dyadic coordinates.
 */

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sgh/gasket.hpp"

namespace sgh {

inline constexpr unsigned kMaxGraphLevel = 6;

using VertexId = std::size_t;

struct GraphPoint {
    Rational x;
    Rational y;

    friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
    friend auto operator<=>(const GraphPoint& a, const GraphPoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

/// A cell of some level with its three vertices (p0, p1, p2 order).
struct GraphCell {
    CellAddress address;
    std::array<VertexId, 3> vertex;
};

/// A cell of level < m together with its three edge midpoints, which are
/// vertices one level finer.
struct MidpointTriangle {
    unsigned level = 0;
    std::array<VertexId, 3> vertex;    // v0, v1, v2
    std::array<VertexId, 3> midpoint;  // v12, v02, v01
};

class GasketGraph {
public:
    /// Throws PreconditionError for m > kMaxGraphLevel.
    static GasketGraph build(unsigned m);

    unsigned level() const { return level_; }
    std::size_t vertex_count() const { return points_.size(); }
    const GraphPoint& point(VertexId v) const { return points_[v]; }
    VertexId find(const GraphPoint& p) const;

    /// Minimal triangles of G_m (3^m cells of level m).
    const std::vector<GraphCell>& cells() const { return cells_; }
    /// Every cell of levels 0..m-1 with its midpoints.
    const std::vector<MidpointTriangle>& midpoint_triangles() const { return triangles_; }
    /// Indices of p0, p1, p2.
    std::array<VertexId, 3> boundary() const { return {0, 1, 2}; }
    bool is_boundary(VertexId v) const { return v < 3; }
    /// Neighbours in G_m, sorted.
    const std::vector<VertexId>& neighbours(VertexId v) const { return adjacency_[v]; }

private:
    VertexId intern(const GraphPoint& p);

    unsigned level_ = 0;
    std::vector<GraphPoint> points_;
    std::map<GraphPoint, VertexId> index_;
    std::vector<GraphCell> cells_;
    std::vector<MidpointTriangle> triangles_;
    std::vector<std::vector<VertexId>> adjacency_;
};

/// Expected vertex count 3(3^m + 1)/2.
std::size_t expected_vertex_count(unsigned m);

/// Values at every vertex of `graph` such that each non-boundary vertex is
/// the mean of its four neighbours, with f(p0), f(p1), f(p2) fixed.
std::vector<Rational> solve_harmonic(const GasketGraph& graph, const BoundaryValues& bv);

struct HarmonicSolution {
    GasketGraph graph;
    std::vector<Rational> values;
};

/// Builds G_m and solves it; m >= 1.
HarmonicSolution solve_harmonic(unsigned m, const BoundaryValues& bv);

/// True iff f(v_i) + f(v_j) + f(v_ik) + f(v_jk) - 4 f(v_ij) = 0 for every
/// midpoint of every cell of every level below m. Throws PreconditionError
/// when a vertex value is missing.
bool check_five_point(const GasketGraph& graph, const std::vector<Rational>& values);

/// Vertex values produced by the extension algorithm via cell addressing.
std::vector<Rational> extension_values(const GasketGraph& graph, const BoundaryValues& bv);

}  // namespace sgh
