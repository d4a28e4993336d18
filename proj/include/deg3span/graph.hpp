#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace deg3span {

using Edge = std::pair<int, int>; // unordered, stored with first < second

// Straight-line graph: vertices with coordinates, undirected edges, and an
// optional Steiner mask (false for original input points).
struct GeometricGraph {
    PointSet points;
    std::vector<Edge> edges;
    std::vector<bool> steiner; // empty means "no Steiner vertices"

    void add_edge(int u, int v) {
        if (u == v) throw input_error("self-loop edge");
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    // sort edges and drop duplicates so identical graphs serialize identically
    void normalize() {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    void check_indices() const {
        int n = (int)points.size();
        for (const Edge& e : edges)
            if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n || e.first == e.second)
                throw input_error("edge index out of range");
        if (!steiner.empty() && (int)steiner.size() != n)
            throw input_error("steiner mask length mismatch");
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(points.size(), 0);
        for (const Edge& e : edges) { ++deg[e.first]; ++deg[e.second]; }
        return deg;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(points.size());
        for (const Edge& e : edges) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        return adj;
    }

    bool is_steiner(int v) const { return !steiner.empty() && steiner[v]; }

    std::vector<int> original_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < (int)points.size(); ++v)
            if (!is_steiner(v)) out.push_back(v);
        return out;
    }
};

} // namespace deg3span
