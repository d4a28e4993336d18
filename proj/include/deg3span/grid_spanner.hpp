#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <vector>

#include "graph.hpp"
#include "verifier.hpp"

namespace deg3span {

// Non-uniform rectangular grid: k vertical lines at xs, m horizontal lines at
// ys. Vertex p_{i,j} (1-based row i, column j) sits at (xs[j-1], ys[i-1]); the
// exported vertex id is (i-1)*k + (j-1), row-major.
struct Grid {
    std::vector<double> xs;
    std::vector<double> ys;

    int cols() const { return (int)xs.size(); }
    int rows() const { return (int)ys.size(); }
    int vertex_id(int i, int j) const { return (i - 1) * cols() + (j - 1); }
    Point vertex(int i, int j) const { return {xs[j - 1], ys[i - 1]}; }
};

inline void validate_grid(const Grid& g) {
    if (g.xs.empty() || g.ys.empty()) throw input_error("grid needs at least one line per axis");
    for (double v : g.xs)
        if (!std::isfinite(v)) throw input_error("grid coordinate not finite");
    for (double v : g.ys)
        if (!std::isfinite(v)) throw input_error("grid coordinate not finite");
    for (size_t i = 1; i < g.xs.size(); ++i)
        if (!(g.xs[i - 1] < g.xs[i])) throw input_error("grid xs must be strictly increasing");
    for (size_t i = 1; i < g.ys.size(); ++i)
        if (!(g.ys[i - 1] < g.ys[i])) throw input_error("grid ys must be strictly increasing");
}

inline PointSet grid_points(const Grid& g) {
    PointSet pts;
    pts.reserve((size_t)g.rows() * g.cols());
    for (int i = 1; i <= g.rows(); ++i)
        for (int j = 1; j <= g.cols(); ++j) pts.push_back(g.vertex(i, j));
    return pts;
}

// h(i,j) joins p_{i,j} and p_{i,j+1}; v(i,j) joins p_{i,j} and p_{i+1,j}.
struct GridEdge {
    bool vertical = false;
    int i = 0, j = 0;

    friend bool operator<(const GridEdge& a, const GridEdge& b) {
        return std::tie(a.vertical, a.i, a.j) < std::tie(b.vertical, b.i, b.j);
    }
    friend bool operator==(const GridEdge& a, const GridEdge& b) {
        return a.vertical == b.vertical && a.i == b.i && a.j == b.j;
    }
};

enum class EdgeColor { Red, Blue, Boundary };

inline std::pair<int, int> grid_edge_vertices(const Grid& g, const GridEdge& e) {
    if (e.vertical) return {g.vertex_id(e.i, e.j), g.vertex_id(e.i + 1, e.j)};
    return {g.vertex_id(e.i, e.j), g.vertex_id(e.i, e.j + 1)};
}

inline double grid_edge_length(const Grid& g, const GridEdge& e) {
    if (e.vertical) return g.ys[e.i] - g.ys[e.i - 1];
    return g.xs[e.j] - g.xs[e.j - 1];
}

inline std::vector<GridEdge> grid_edges(const Grid& g) {
    std::vector<GridEdge> out;
    for (int i = 1; i <= g.rows(); ++i)
        for (int j = 1; j < g.cols(); ++j) out.push_back({false, i, j});
    for (int i = 1; i < g.rows(); ++i)
        for (int j = 1; j <= g.cols(); ++j) out.push_back({true, i, j});
    return out;
}

// A horizontal edge is a boundary edge iff it lies on the top or bottom grid
// line, a vertical one iff it lies on the left or right line. Internal edges
// split by the parity rule: red iff i and j have equal parity (covering both
// the even/even and odd/odd families), blue otherwise. Every internal vertex
// then touches exactly two red and two blue edges.
inline EdgeColor classify_edge(const Grid& g, const GridEdge& e) {
    if (e.vertical) {
        if (e.j == 1 || e.j == g.cols()) return EdgeColor::Boundary;
    } else {
        if (e.i == 1 || e.i == g.rows()) return EdgeColor::Boundary;
    }
    return (e.i % 2 == e.j % 2) ? EdgeColor::Red : EdgeColor::Blue;
}

inline std::vector<std::pair<GridEdge, EdgeColor>> classify_edges(const Grid& g) {
    validate_grid(g);
    if (g.rows() < 3 || g.cols() < 3)
        throw grid_too_small_error("red/blue classification needs at least a 3x3 grid");
    std::vector<std::pair<GridEdge, EdgeColor>> out;
    for (const GridEdge& e : grid_edges(g)) out.emplace_back(e, classify_edge(g, e));
    return out;
}

// The full grid graph (every horizontal and vertical neighbor edge).
inline GeometricGraph grid_graph(const Grid& g) {
    validate_grid(g);
    GeometricGraph out;
    out.points = grid_points(g);
    for (const GridEdge& e : grid_edges(g)) {
        auto [a, b] = grid_edge_vertices(g, e);
        out.add_edge(a, b);
    }
    out.normalize();
    return out;
}

// Drop all red edges, then sweep the slabs in non-decreasing width order
// (ties: horizontal slabs first, then ascending index) and re-insert a red
// edge iff both of its endpoints still have degree 2. Small grids (m or k
// <= 2) are returned unchanged: the full grid already has degree <= 3.
// reverse_within_slab flips the default left-to-right / bottom-up scan inside
// each slab; the claimed bounds hold for any within-slab order and the test
// suite re-checks them under the reversed one.
inline GeometricGraph build_grid_spanner(const Grid& g, bool reverse_within_slab = false) {
    validate_grid(g);
    int m = g.rows(), k = g.cols();
    if (m <= 2 || k <= 2) return grid_graph(g);

    GeometricGraph out;
    out.points = grid_points(g);
    std::vector<int> deg(out.points.size(), 0);
    for (const GridEdge& e : grid_edges(g)) {
        if (classify_edge(g, e) == EdgeColor::Red) continue;
        auto [a, b] = grid_edge_vertices(g, e);
        out.add_edge(a, b);
        ++deg[a];
        ++deg[b];
    }

    // slabs: (width, kind, index); kind 0 = horizontal slab H_i, 1 = vertical V_j
    std::vector<std::tuple<double, int, int>> slabs;
    for (int i = 1; i < m; ++i) slabs.emplace_back(g.ys[i] - g.ys[i - 1], 0, i);
    for (int j = 1; j < k; ++j) slabs.emplace_back(g.xs[j] - g.xs[j - 1], 1, j);
    std::sort(slabs.begin(), slabs.end());

    for (const auto& [width, kind, idx] : slabs) {
        std::vector<GridEdge> cand;
        if (kind == 0) {
            // red vertical edges crossing H_idx, left to right
            for (int j = 2; j <= k - 1; ++j) {
                GridEdge e{true, idx, j};
                if (classify_edge(g, e) == EdgeColor::Red) cand.push_back(e);
            }
        } else {
            // red horizontal edges crossing V_idx, bottom-up
            for (int i = 2; i <= m - 1; ++i) {
                GridEdge e{false, i, idx};
                if (classify_edge(g, e) == EdgeColor::Red) cand.push_back(e);
            }
        }
        if (reverse_within_slab) std::reverse(cand.begin(), cand.end());
        for (const GridEdge& e : cand) {
            auto [a, b] = grid_edge_vertices(g, e);
            if (deg[a] == 2 && deg[b] == 2) {
                out.add_edge(a, b);
                ++deg[a];
                ++deg[b];
            }
        }
    }
    out.normalize();
    return out;
}

struct MissingEdgeDetour {
    GridEdge edge;
    Edge vertices;
    double detour = 0.0; // shortest-path distance over edge length
};

// For every red edge absent from the spanner, the detour its endpoints suffer.
inline std::vector<MissingEdgeDetour> missing_edge_detours(const Grid& g,
                                                           const GeometricGraph& spanner) {
    validate_grid(g);
    if (g.rows() < 3 || g.cols() < 3)
        throw grid_too_small_error("missing_edge_detours needs at least a 3x3 grid");
    std::set<Edge> present(spanner.edges.begin(), spanner.edges.end());
    detail::Csr csr(spanner);
    std::vector<double> d;
    std::vector<MissingEdgeDetour> out;
    for (const GridEdge& e : grid_edges(g)) {
        if (classify_edge(g, e) != EdgeColor::Red) continue;
        auto [a, b] = grid_edge_vertices(g, e);
        Edge key{std::min(a, b), std::max(a, b)};
        if (present.count(key)) continue;
        csr.dijkstra(a, d);
        out.push_back({e, key, d[b] / grid_edge_length(g, e)});
    }
    return out;
}

} // namespace deg3span
