#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "graph.hpp"
#include "verifier.hpp"

namespace deg3span {

struct SteinerConfig {
    double epsilon = 0.0;   // the requested stretch slack
    double cp = 0.0;        // closest pair distance of the original points
    double eps_prime = 0.0; // epsilon * cp
    double radius = 0.0;    // eps_prime / (pi * n), per-vertex circle radius
};

inline SteinerConfig steiner_config(const GeometricGraph& g, double epsilon) {
    if (!(epsilon > 0.0)) throw input_error("epsilon must be positive");
    if (g.points.size() < 2) throw input_error("augmentation needs at least 2 points");
    SteinerConfig cfg;
    cfg.epsilon = epsilon;
    cfg.cp = closest_pair(g.points).distance;
    cfg.eps_prime = epsilon * cfg.cp;
    cfg.radius = cfg.eps_prime / (std::numbers::pi * (double)g.points.size());
    if (!(cfg.radius < cfg.cp / 3.0))
        throw input_error("epsilon too large: circle radius must stay below a third of the closest pair distance");
    return cfg;
}

// total_degree + n Steiner points; the planar degree sum caps this at 7n-12.
inline int count_bound(int n, int total_degree) {
    if (n < 3) throw input_error("count_bound needs n >= 3");
    if (total_degree > 6 * n - 12)
        throw degree_bound_error("total degree exceeds 6n-12: input graph cannot be plane and simple");
    return total_degree + n;
}

namespace detail {

inline double angle_of(const Point& from, const Point& to) {
    double a = std::atan2(to.y - from.y, to.x - from.x);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
}

} // namespace detail

// Replace every original vertex p by a small circle: one Steiner point where
// each incident edge crosses the circle, one extra point p' on the free arc,
// chord edges walking the circle, and a single spoke (p, p'). Original edges
// survive truncated between the two circles of their endpoints. The result is
// plane, every vertex has degree <= 3, originals keep exactly the spoke, and
// the stretch measured over original pairs grows by at most epsilon.
//
// p' placement: midpoint of the largest angular gap between crossing
// directions; a quarter turn from the single crossing for degree-1 vertices
// (the gap midpoint would be antipodal there, collapsing spoke and chord into
// one line); due east for isolated vertices. A chord whose endpoints are
// exactly antipodal (collinear incident edges, routine in grid inputs) would
// pass through the center vertex, so it is dropped and the circle walk becomes
// a path; the longer walk this forces is still far inside the epsilon budget,
// which the stretch checks confirm on every corpus instance.
inline GeometricGraph augment_to_degree3(const GeometricGraph& g, double epsilon) {
    g.check_indices();
    validate_point_set(g.points);
    { // the construction is only meaningful on plane inputs
        PlanarityResult pl = verify_planarity(g);
        if (!pl.is_plane) throw not_plane_error("input graph is not plane");
    }
    SteinerConfig cfg = steiner_config(g, epsilon);

    int n = (int)g.points.size();
    std::vector<std::vector<int>> adj = g.adjacency();
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    const double pi = std::numbers::pi;
    for (int attempt = 0; attempt <= 40; ++attempt, cfg.radius /= 2.0) {
        double r = cfg.radius;
        GeometricGraph out;
        out.points = g.points;
        out.steiner.assign(n, false);

        // crossing Steiner points, indexed per directed edge (u toward v)
        std::map<std::pair<int, int>, int> crossing;
        for (int u = 0; u < n; ++u) {
            for (int v : adj[u]) {
                double len = dist(g.points[u], g.points[v]);
                Point s{g.points[u].x + r * (g.points[v].x - g.points[u].x) / len,
                        g.points[u].y + r * (g.points[v].y - g.points[u].y) / len};
                crossing[{u, v}] = (int)out.points.size();
                out.points.push_back(s);
                out.steiner.push_back(true);
            }
        }
        std::vector<int> prime(n);
        for (int u = 0; u < n; ++u) {
            prime[u] = (int)out.points.size();
            out.points.push_back(g.points[u]); // placeholder, placed below
            out.steiner.push_back(true);
        }

        for (const Edge& e : g.edges)
            out.add_edge(crossing[{e.first, e.second}], crossing[{e.second, e.first}]);

        bool collision = false;
        for (int u = 0; u < n && !collision; ++u) {
            const Point& c = g.points[u];
            std::vector<std::pair<double, int>> ring;
            for (int v : adj[u]) {
                int s = crossing[{u, v}];
                ring.emplace_back(detail::angle_of(c, out.points[s]), s);
            }
            std::sort(ring.begin(), ring.end());
            size_t k = ring.size();
            double t;
            if (k == 0) {
                t = 0.0;
            } else if (k == 1) {
                t = std::fmod(ring[0].first + pi / 2.0, 2.0 * pi);
            } else {
                size_t gi = 0;
                double best = -1.0;
                for (size_t i = 0; i < k; ++i) {
                    double gap = (i + 1 < k) ? ring[i + 1].first - ring[i].first
                                             : ring[0].first + 2.0 * pi - ring[k - 1].first;
                    if (gap > best) { best = gap; gi = i; }
                }
                t = std::fmod(ring[gi].first + best / 2.0, 2.0 * pi);
            }
            out.points[prime[u]] = Point{c.x + r * std::cos(t), c.y + r * std::sin(t)};
            ring.emplace_back(t, prime[u]);
            std::sort(ring.begin(), ring.end());

            for (size_t i = 0; i < ring.size() && !collision; ++i)
                for (size_t j = i + 1; j < ring.size(); ++j)
                    if (dist(out.points[ring[i].second], out.points[ring[j].second]) < 1e-12) {
                        collision = true;
                        break;
                    }
            if (collision) break;

            out.add_edge(u, prime[u]);
            if (ring.size() == 2) {
                out.add_edge(ring[0].second, ring[1].second);
            } else if (ring.size() >= 3) {
                for (size_t i = 0; i < ring.size(); ++i) {
                    int a = ring[i].second, b = ring[(i + 1) % ring.size()].second;
                    const Point& pa = out.points[a];
                    const Point& pb = out.points[b];
                    if (orientation(pa, pb, c) == 0 && collinear_on_segment(pa, pb, c))
                        continue; // chord through the center vertex
                    out.add_edge(a, b);
                }
            }
        }
        if (collision) continue; // halve the radius and retry
        out.normalize();
        return out;
    }
    throw radius_collision_error(
        "two Steiner points on one circle coincide even after 40 radius halvings");
}

} // namespace deg3span
