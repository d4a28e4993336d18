#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace deg3span {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

using PointSet = std::vector<Point>;

struct Segment {
    Point a, b;
};

struct Lune {
    Point p, q; // intersection of the closed disks of radius |pq| centered at p and q
};

struct Disk {
    Point p, q; // closed disk with pq as diameter
};

using rational = boost::multiprecision::cpp_rational;

inline double sq_dist(const Point& a, const Point& b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(sq_dist(a, b)); }

namespace detail {

// 2^-53, the unit roundoff for double.
inline constexpr double kEps = 1.1102230246251565e-16;
// Shewchuk's static filter constant for the 2x2 orientation determinant.
inline constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

inline int orientation_exact(const Point& a, const Point& b, const Point& c) {
    rational det = (rational(a.x) - rational(c.x)) * (rational(b.y) - rational(c.y)) -
                   (rational(a.y) - rational(c.y)) * (rational(b.x) - rational(c.x));
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

} // namespace detail

// Exact sign of (b-a) x (c-a): +1 counterclockwise, 0 collinear, -1 clockwise.
// Double-precision filter with escalation to exact rational arithmetic when the
// floating-point result cannot be trusted.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    double detleft = (a.x - c.x) * (b.y - c.y);
    double detright = (a.y - c.y) * (b.x - c.x);
    double det = detleft - detright;
    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det != 0.0 ? detail::sign_of(det) : detail::orientation_exact(a, b, c);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det != 0.0 ? detail::sign_of(det) : detail::orientation_exact(a, b, c);
        detsum = -detleft - detright;
    } else {
        return det != 0.0 ? detail::sign_of(det) : detail::orientation_exact(a, b, c);
    }
    double errbound = detail::kCcwErrBoundA * detsum;
    if (det >= errbound || -det >= errbound) return detail::sign_of(det);
    return detail::orientation_exact(a, b, c);
}

// Exact sign of the dot product (c-p).(c-q); <= 0 iff c lies in the closed disk
// with diameter pq (Thales).
inline int dot_sign(const Point& p, const Point& q, const Point& c) {
    double t1 = (c.x - p.x) * (c.x - q.x);
    double t2 = (c.y - p.y) * (c.y - q.y);
    double s = t1 + t2;
    double errbound = 16.0 * detail::kEps * (std::fabs(t1) + std::fabs(t2));
    if (s > errbound || -s > errbound) return detail::sign_of(s);
    rational e = (rational(c.x) - rational(p.x)) * (rational(c.x) - rational(q.x)) +
                 (rational(c.y) - rational(p.y)) * (rational(c.y) - rational(q.y));
    return e > 0 ? 1 : (e < 0 ? -1 : 0);
}

// Exact comparison of squared lengths |ab|^2 vs |cd|^2: -1 / 0 / +1.
inline int cmp_sq_dist(const Point& a, const Point& b, const Point& c, const Point& d) {
    double dx1 = a.x - b.x, dy1 = a.y - b.y;
    double dx2 = c.x - d.x, dy2 = c.y - d.y;
    double s1 = dx1 * dx1 + dy1 * dy1;
    double s2 = dx2 * dx2 + dy2 * dy2;
    double diff = s1 - s2;
    double errbound = 8.0 * detail::kEps * (s1 + s2);
    if (diff > errbound || -diff > errbound) return detail::sign_of(diff);
    auto sq = [](const Point& u, const Point& v) -> rational {
        rational dx = rational(u.x) - rational(v.x);
        rational dy = rational(u.y) - rational(v.y);
        return dx * dx + dy * dy;
    };
    rational e = sq(a, b) - sq(c, d);
    return e > 0 ? 1 : (e < 0 ? -1 : 0);
}

// r is known to be collinear with segment pq; true iff r lies on the closed segment.
inline bool collinear_on_segment(const Point& p, const Point& q, const Point& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

// True iff the segments share a point other than a common endpoint. Crossings,
// collinear overlap, and an endpoint in the other segment's interior all count;
// sharing exactly one identical endpoint does not (unless they also overlap
// beyond it, which only happens for collinear segments).
inline bool segments_properly_intersect(const Point& p1, const Point& q1, const Point& p2, const Point& q2) {
    // bounding-box reject: cheap and exact
    if (std::max(p1.x, q1.x) < std::min(p2.x, q2.x) || std::max(p2.x, q2.x) < std::min(p1.x, q1.x) ||
        std::max(p1.y, q1.y) < std::min(p2.y, q2.y) || std::max(p2.y, q2.y) < std::min(p1.y, q1.y))
        return false;

    bool s11 = p1 == p2, s12 = p1 == q2, s21 = q1 == p2, s22 = q1 == q2;
    int shared = int(s11) + int(s12) + int(s21) + int(s22);
    if (shared >= 2) return true; // identical segments
    if (shared == 1) {
        // shared endpoint e; the free endpoints a,b may only re-meet if collinear
        Point e, a, b;
        if (s11) { e = p1; a = q1; b = q2; }
        else if (s12) { e = p1; a = q1; b = p2; }
        else if (s21) { e = q1; a = p1; b = q2; }
        else { e = q1; a = p1; b = p2; }
        if (orientation(e, a, b) != 0) return false;
        // overlap beyond e iff a and b extend to the same side: (a-e).(b-e) > 0
        return dot_sign(a, b, e) > 0;
    }

    int d1 = orientation(p2, q2, p1);
    int d2 = orientation(p2, q2, q1);
    int d3 = orientation(p1, q1, p2);
    int d4 = orientation(p1, q1, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && collinear_on_segment(p2, q2, p1)) return true;
    if (d2 == 0 && collinear_on_segment(p2, q2, q1)) return true;
    if (d3 == 0 && collinear_on_segment(p1, q1, p2)) return true;
    if (d4 == 0 && collinear_on_segment(p1, q1, q2)) return true;
    return false;
}

inline bool segments_properly_intersect(const Segment& s1, const Segment& s2) {
    return segments_properly_intersect(s1.a, s1.b, s2.a, s2.b);
}

inline void validate_point_set(const PointSet& s) {
    for (const Point& p : s)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw input_error("point set contains a non-finite coordinate");
    std::vector<int> order(s.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return s[i].x != s[j].x ? s[i].x < s[j].x : s[i].y < s[j].y;
    });
    for (size_t i = 1; i < order.size(); ++i)
        if (s[order[i - 1]] == s[order[i]])
            throw input_error("point set contains coincident points");
}

// Pair realizing the maximum pairwise distance; ties broken by smallest (i, j).
inline std::pair<int, int> diametral_pair(const PointSet& s) {
    if (s.size() < 2) throw input_error("diametral_pair needs at least 2 points");
    int bi = 0, bj = 1;
    for (int i = 0; i < (int)s.size(); ++i)
        for (int j = i + 1; j < (int)s.size(); ++j)
            if (cmp_sq_dist(s[i], s[j], s[bi], s[bj]) > 0) { bi = i; bj = j; }
    return {bi, bj};
}

struct ClosestPair {
    int i = -1, j = -1;
    double distance = 0.0;
};

// Pair realizing the minimum pairwise distance; ties broken by smallest (i, j).
inline ClosestPair closest_pair(const PointSet& s) {
    if (s.size() < 2) throw input_error("closest_pair needs at least 2 points");
    int bi = 0, bj = 1;
    for (int i = 0; i < (int)s.size(); ++i)
        for (int j = i + 1; j < (int)s.size(); ++j)
            if (cmp_sq_dist(s[i], s[j], s[bi], s[bj]) < 0) { bi = i; bj = j; }
    return {bi, bj, dist(s[bi], s[bj])};
}

// Closed containment: |cp| <= |pq| and |cq| <= |pq|, decided on squared distances.
inline bool lune_contains(const Lune& l, const Point& c) {
    return cmp_sq_dist(c, l.p, l.p, l.q) <= 0 && cmp_sq_dist(c, l.q, l.p, l.q) <= 0;
}

// Closed disk with diameter pq: (c-p).(c-q) <= 0.
inline bool disk_contains(const Disk& d, const Point& c) {
    return dot_sign(d.p, d.q, c) <= 0;
}

// True iff S (translated by minus its centroid) maps onto itself under negation,
// pairing each point with a partner within tol of its mirror. tol < 0 selects
// the default of 1e-9 times the diameter.
inline bool is_centrally_symmetric(const PointSet& s, double tol = -1.0) {
    if (s.empty()) return true;
    if (tol < 0.0) {
        double diam = 0.0;
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                diam = std::max(diam, dist(s[i], s[j]));
        tol = 1e-9 * diam;
    }
    double cx = 0.0, cy = 0.0;
    for (const Point& p : s) { cx += p.x; cy += p.y; }
    cx /= (double)s.size();
    cy /= (double)s.size();
    std::vector<bool> used(s.size(), false);
    for (size_t i = 0; i < s.size(); ++i) {
        if (used[i]) continue;
        Point want{2.0 * cx - s[i].x, 2.0 * cy - s[i].y};
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t j = i; j < s.size(); ++j) {
            if (used[j]) continue;
            double dd = dist(s[j], want);
            if (dd < best_d) { best_d = dd; best = (int)j; }
        }
        if (best < 0 || best_d > tol) return false;
        used[i] = true;
        used[best] = true;
    }
    return true;
}

} // namespace deg3span
