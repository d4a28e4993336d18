#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"
#include "hull.hpp"

namespace deg3span {

// Ordered polyline over vertex indices of some PointSet.
using Chain = std::vector<int>;

namespace detail {

// The recursion of the matching algorithm: emit the closest inter-chain pair,
// split both chains by the line through it, recurse on same-side halves.
// Assumes the public-entry preconditions (convex position, linear separation).
inline void matching_rec(const Chain& c1, const Chain& c2, const PointSet& s,
                         std::vector<Edge>& out) {
    if (c1.empty() || c2.empty()) return;
    size_t ba = 0, bb = 0;
    for (size_t i = 0; i < c1.size(); ++i)
        for (size_t j = 0; j < c2.size(); ++j)
            if (cmp_sq_dist(s[c1[i]], s[c2[j]], s[c1[ba]], s[c2[bb]]) < 0) { ba = i; bb = j; }
    int a = c1[ba], b = c2[bb];
    out.emplace_back(std::min(a, b), std::max(a, b));
    Chain a1, b1, a2, b2;
    for (int v : c1) {
        if (v == a) continue;
        int side = orientation(s[a], s[b], s[v]);
        if (side > 0) a1.push_back(v);
        else if (side < 0) b1.push_back(v);
    }
    for (int v : c2) {
        if (v == b) continue;
        int side = orientation(s[a], s[b], s[v]);
        if (side > 0) a2.push_back(v);
        else if (side < 0) b2.push_back(v);
    }
    matching_rec(a1, a2, s, out);
    matching_rec(b1, b2, s, out);
}

} // namespace detail

// Matching between two linearly separated convex chains: recursive closest-pair
// selection. Validates that the combined vertex set is in strict convex position
// and that the chains occupy disjoint contiguous arcs of its hull (which is
// equivalent to linear separability for convex-position sets).
inline std::vector<Edge> matching(const Chain& c1, const Chain& c2, const PointSet& s) {
    if (c1.empty() || c2.empty()) return {};
    PointSet sub;
    std::vector<int> label; // 1 for c1, 2 for c2
    for (int v : c1) { sub.push_back(s.at(v)); label.push_back(1); }
    for (int v : c2) { sub.push_back(s.at(v)); label.push_back(2); }
    validate_point_set(sub); // also rejects a vertex shared between the chains
    if (sub.size() >= 3 && !is_convex_position(sub))
        throw not_convex_error("chain union is not in convex position");
    std::vector<int> h = convex_hull(sub);
    int transitions = 0;
    for (size_t i = 0; i < h.size(); ++i)
        if (label[h[i]] != label[h[(i + 1) % h.size()]]) ++transitions;
    if (sub.size() >= 3 && transitions != 2)
        throw not_separated_error("chains are not linearly separated");
    std::vector<Edge> out;
    detail::matching_rec(c1, c2, s, out);
    return out;
}

struct ConvexSpanner {
    GeometricGraph graph;
    std::pair<int, int> diametral{-1, -1};
};

// Hull edges plus the matching between the two hull chains left after removing
// the diametral pair. Plane, max degree 3, diametral endpoints degree 2.
inline ConvexSpanner build_convex_spanner(const PointSet& s) {
    validate_point_set(s);
    ConvexSpanner result;
    result.graph.points = s;
    if (s.empty()) throw input_error("build_convex_spanner needs at least 1 point");
    if (s.size() == 1) return result;
    if (s.size() == 2) {
        result.graph.add_edge(0, 1);
        result.diametral = {0, 1};
        return result;
    }
    if (!is_convex_position(s))
        throw not_convex_error("input is not in strict convex position");

    std::vector<int> h = convex_hull(s);
    int n = (int)h.size();
    for (int i = 0; i < n; ++i) result.graph.add_edge(h[i], h[(i + 1) % n]);

    auto [p, q] = diametral_pair(s);
    result.diametral = {p, q};
    int pi = -1, qi = -1;
    for (int i = 0; i < n; ++i) {
        if (h[i] == p) pi = i;
        if (h[i] == q) qi = i;
    }
    Chain c1, c2;
    for (int t = (pi + 1) % n; t != qi; t = (t + 1) % n) c1.push_back(h[t]);
    for (int t = (qi + 1) % n; t != pi; t = (t + 1) % n) c2.push_back(h[t]);
    std::vector<Edge> match;
    detail::matching_rec(c1, c2, s, match);
    for (const Edge& e : match) result.graph.edges.push_back(e);
    result.graph.normalize();
    return result;
}

struct ChainStretch {
    double value = 1.0;
    std::pair<int, int> witness{-1, -1};
};

// Max over vertex pairs of (path length along the chain) / (Euclidean distance).
inline ChainStretch chain_stretch(const Chain& c, const PointSet& s) {
    if (c.size() < 2) throw input_error("chain_stretch needs at least 2 vertices");
    for (size_t i = 1; i < c.size(); ++i)
        if (s.at(c[i - 1]) == s.at(c[i])) throw input_error("chain repeats consecutive vertices");
    std::vector<double> pre(c.size(), 0.0);
    for (size_t i = 1; i < c.size(); ++i)
        pre[i] = pre[i - 1] + dist(s[c[i - 1]], s[c[i]]);
    ChainStretch r;
    r.value = 0.0;
    for (size_t i = 0; i + 1 < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            double ratio = (pre[j] - pre[i]) / dist(s[c[i]], s[c[j]]);
            if (ratio > r.value) {
                r.value = ratio;
                r.witness = {c[i], c[j]};
            }
        }
    return r;
}

} // namespace deg3span
