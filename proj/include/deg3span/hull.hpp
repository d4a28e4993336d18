#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "geometry.hpp"

namespace deg3span {

// Indices of the convex hull vertices in counterclockwise order. Points interior
// to a hull edge are excluded (strict hull). The cyclic order is canonicalized to
// start at the smallest participating index.
inline std::vector<int> convex_hull(const PointSet& s) {
    if (s.empty()) throw input_error("convex_hull needs at least 1 point");
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (s[i].x != s[j].x) return s[i].x < s[j].x;
        if (s[i].y != s[j].y) return s[i].y < s[j].y;
        return i < j;
    });
    if (s.size() == 1) return {order[0]};
    if (s.size() == 2) return {order[0], order[1]};

    std::vector<int> h;
    h.reserve(2 * s.size());
    // lower hull, then upper hull; strict left turns only
    for (int idx : order) {
        while (h.size() >= 2 && orientation(s[h[h.size() - 2]], s[h.back()], s[idx]) <= 0) h.pop_back();
        h.push_back(idx);
    }
    size_t lower = h.size() + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (h.size() >= lower && orientation(s[h[h.size() - 2]], s[h.back()], s[*it]) <= 0) h.pop_back();
        h.push_back(*it);
    }
    h.pop_back(); // last == first

    auto smallest = std::min_element(h.begin(), h.end());
    std::rotate(h.begin(), smallest, h.end());
    return h;
}

// True iff every point of S is a strict vertex of the hull (no interior points,
// none on an open hull edge).
inline bool is_convex_position(const PointSet& s) {
    if (s.size() < 3) throw input_error("is_convex_position needs at least 3 points");
    return convex_hull(s).size() == s.size();
}

} // namespace deg3span
