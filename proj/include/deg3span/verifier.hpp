#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace deg3span {

struct PlanarityResult {
    bool is_plane = true;
    std::optional<std::pair<Edge, Edge>> witness; // first violating edge pair
};

// Geometric planarity: no two edges share a point other than a common endpoint.
// O(E^2) pairwise check with exact predicates.
inline PlanarityResult verify_planarity(const GeometricGraph& g) {
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& a = g.edges[i];
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            const Edge& b = g.edges[j];
            if (segments_properly_intersect(g.points[a.first], g.points[a.second],
                                            g.points[b.first], g.points[b.second]))
                return {false, std::make_pair(a, b)};
        }
    }
    return {true, std::nullopt};
}

inline int max_degree(const GeometricGraph& g) {
    int m = 0;
    for (int d : g.degrees()) m = std::max(m, d);
    return m;
}

struct StretchResult {
    bool connected = true;
    double stretch = 1.0;
    std::pair<int, int> witness{-1, -1}; // attains the stretch, or a separated pair
};

namespace detail {

// compressed adjacency with Euclidean edge weights
struct Csr {
    std::vector<int> off, to;
    std::vector<double> w;

    explicit Csr(const GeometricGraph& g) {
        int n = (int)g.points.size();
        off.assign(n + 1, 0);
        for (const Edge& e : g.edges) { ++off[e.first + 1]; ++off[e.second + 1]; }
        for (int v = 0; v < n; ++v) off[v + 1] += off[v];
        to.resize(off[n]);
        w.resize(off[n]);
        std::vector<int> cur(off.begin(), off.end() - 1);
        for (const Edge& e : g.edges) {
            double len = dist(g.points[e.first], g.points[e.second]);
            to[cur[e.first]] = e.second;
            w[cur[e.first]++] = len;
            to[cur[e.second]] = e.first;
            w[cur[e.second]++] = len;
        }
    }

    void dijkstra(int src, std::vector<double>& d) const {
        d.assign(off.size() - 1, std::numeric_limits<double>::infinity());
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        d[src] = 0.0;
        pq.emplace(0.0, src);
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du > d[u]) continue;
            for (int k = off[u]; k < off[u + 1]; ++k) {
                double nd = du + w[k];
                if (nd < d[to[k]]) {
                    d[to[k]] = nd;
                    pq.emplace(nd, to[k]);
                }
            }
        }
    }
};

} // namespace detail

// Max over vertex pairs of shortest-path distance / Euclidean distance. When
// restrict_to is given, only pairs within that subset are measured (used to
// score Steiner graphs over their original vertices). Reports disconnection
// with a separated pair instead of a stretch.
inline StretchResult stretch_factor(const GeometricGraph& g,
                                    const std::vector<int>* restrict_to = nullptr) {
    std::vector<int> all;
    if (!restrict_to) {
        all.resize(g.points.size());
        for (int v = 0; v < (int)g.points.size(); ++v) all[v] = v;
        restrict_to = &all;
    }
    const std::vector<int>& verts = *restrict_to;
    StretchResult r;
    if (verts.size() < 2) return r;
    detail::Csr csr(g);
    std::vector<double> d;
    r.stretch = 0.0;
    for (size_t a = 0; a + 1 < verts.size(); ++a) {
        csr.dijkstra(verts[a], d);
        for (size_t b = a + 1; b < verts.size(); ++b) {
            if (std::isinf(d[verts[b]])) return {false, 0.0, {verts[a], verts[b]}};
            double ratio = d[verts[b]] / dist(g.points[verts[a]], g.points[verts[b]]);
            if (ratio > r.stretch) {
                r.stretch = ratio;
                r.witness = {verts[a], verts[b]};
            }
        }
    }
    if (r.stretch < 1.0) r.stretch = 1.0; // single-edge graphs measure exactly 1
    return r;
}

struct SpannerReport {
    int max_degree = 0;
    bool is_plane = true;
    std::optional<std::pair<Edge, Edge>> plane_witness;
    bool connected = true;
    double stretch = 0.0;
    std::pair<int, int> witness{-1, -1};
};

inline SpannerReport verify(const GeometricGraph& g, bool restrict_original = false) {
    g.check_indices();
    SpannerReport rep;
    rep.max_degree = max_degree(g);
    PlanarityResult pl = verify_planarity(g);
    rep.is_plane = pl.is_plane;
    rep.plane_witness = pl.witness;
    StretchResult st;
    if (restrict_original && !g.steiner.empty()) {
        std::vector<int> orig = g.original_vertices();
        st = stretch_factor(g, &orig);
    } else {
        st = stretch_factor(g);
    }
    rep.connected = st.connected;
    rep.stretch = st.stretch;
    rep.witness = st.witness;
    return rep;
}

} // namespace deg3span
