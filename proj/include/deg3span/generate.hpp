#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "grid_spanner.hpp"
#include "hull.hpp"

namespace deg3span {

// Deterministic RNG: raw mt19937_64 output mapped to doubles by hand so the
// generated corpora do not depend on library distribution internals.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() { return (double)(eng() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next() { return eng(); }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + (int)(next() % (std::uint64_t)(hi - lo + 1));
    }
};

enum class InstanceKind { ConvexRandom, RegularNgon, SymmetricConvex, GridKind, GeneralRandom };

struct InstanceSpec {
    InstanceKind kind = InstanceKind::ConvexRandom;
    int n = 8;          // point count (total; symmetric-convex requires even)
    int rows = 3;       // grids only
    int cols = 3;       // grids only
    std::uint64_t seed = 0;
    double scale = 1.0;
};

using Instance = std::variant<PointSet, Grid>;

namespace detail {

// points on a random smooth closed curve r(theta) = 1 + low-frequency noise,
// pruned to their strict hull until n survivors exist
inline PointSet gen_convex_random(int n, Rng& rng, double scale) {
    double a[3], b[3];
    for (int h = 0; h < 3; ++h) {
        a[h] = rng.uniform(-0.05, 0.05);
        b[h] = rng.uniform(-0.05, 0.05);
    }
    auto radius = [&](double th) {
        double r = 1.0;
        for (int h = 0; h < 3; ++h)
            r += a[h] * std::cos((h + 1) * th) + b[h] * std::sin((h + 1) * th);
        return r;
    };
    PointSet pool;
    for (int round = 0; round < 64; ++round) {
        for (int i = 0; i < n; ++i) {
            double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
            double r = radius(th) * scale;
            pool.push_back({r * std::cos(th), r * std::sin(th)});
        }
        std::vector<int> h = convex_hull(pool);
        PointSet kept;
        for (int idx : h) kept.push_back(pool[idx]);
        pool = kept; // hull vertices are in strict convex position
        if ((int)pool.size() >= n) {
            PointSet out;
            for (int i = 0; i < n; ++i) out.push_back(pool[(size_t)i * pool.size() / n]);
            return out;
        }
    }
    throw spec_error("convex-random generation failed to accumulate enough hull points");
}

inline PointSet gen_regular_ngon(int n, double scale) {
    if (n == 4) // axis-aligned square, exact corners
        return {{0.0, 0.0}, {scale, 0.0}, {scale, scale}, {0.0, scale}};
    PointSet out;
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * std::numbers::pi * (double)i / (double)n;
        out.push_back({scale * std::cos(th), scale * std::sin(th)});
    }
    return out;
}

// m upper-half parameters on a random origin-centered ellipse, unioned with
// their exact negations. Well-separated parameters keep the rounded points in
// strict convex position; the negations make the set bitwise symmetric.
inline PointSet gen_symmetric_convex(int n, Rng& rng, double scale) {
    if (n < 2 || n % 2 != 0)
        throw spec_error("symmetric-convex needs an even point count n = 2m");
    int m = n / 2;
    const double pi = std::numbers::pi;
    for (int round = 0; round < 256; ++round) {
        std::vector<double> th(m);
        for (double& t : th) t = rng.uniform(0.0, pi);
        std::sort(th.begin(), th.end());
        double min_gap = pi - th.back() + th.front(); // th_m wraps to th_1 + pi
        for (int i = 1; i < m; ++i) min_gap = std::min(min_gap, th[i] - th[i - 1]);
        if (min_gap < pi / (8.0 * m)) continue;
        double b = rng.uniform(0.4, 0.9) * scale;
        double rot = rng.uniform(0.0, pi);
        double c = std::cos(rot), s = std::sin(rot);
        PointSet out;
        for (double t : th) {
            double ex = scale * std::cos(t), ey = b * std::sin(t);
            out.push_back({ex * c - ey * s, ex * s + ey * c});
        }
        for (int i = 0; i < m; ++i) out.push_back({-out[i].x, -out[i].y});
        if (m == 1 || is_convex_position(out)) return out;
    }
    throw spec_error("symmetric-convex generation failed to stabilize");
}

inline Grid gen_grid(int rows, int cols, Rng& rng, double scale) {
    if (rows < 1 || cols < 1) throw spec_error("grid needs rows >= 1 and cols >= 1");
    Grid g;
    double x = 0.0, y = 0.0;
    for (int j = 0; j < cols; ++j) {
        g.xs.push_back(x);
        x += rng.uniform(1.0, 10.0) * scale;
    }
    for (int i = 0; i < rows; ++i) {
        g.ys.push_back(y);
        y += rng.uniform(1.0, 10.0) * scale;
    }
    return g;
}

inline PointSet gen_general_random(int n, Rng& rng, double scale) {
    PointSet out;
    int attempts = 0;
    while ((int)out.size() < n) {
        if (++attempts > 200 * n + 1000)
            throw spec_error("general-random generation exhausted its rejection budget");
        Point cand{rng.uniform(0.0, scale), rng.uniform(0.0, scale)};
        bool ok = true;
        for (const Point& p : out)
            if (p == cand) { ok = false; break; }
        for (size_t i = 0; ok && i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                if (orientation(out[i], out[j], cand) == 0) { ok = false; break; }
        if (ok) out.push_back(cand);
    }
    return out;
}

} // namespace detail

inline Instance generate(const InstanceSpec& spec) {
    if (spec.n < 1) throw spec_error("instance needs n >= 1");
    if (!(spec.scale > 0.0)) throw spec_error("scale must be positive");
    Rng rng(spec.seed);
    switch (spec.kind) {
        case InstanceKind::ConvexRandom: return detail::gen_convex_random(spec.n, rng, spec.scale);
        case InstanceKind::RegularNgon: return detail::gen_regular_ngon(spec.n, spec.scale);
        case InstanceKind::SymmetricConvex: return detail::gen_symmetric_convex(spec.n, rng, spec.scale);
        case InstanceKind::GridKind: return detail::gen_grid(spec.rows, spec.cols, rng, spec.scale);
        case InstanceKind::GeneralRandom: return detail::gen_general_random(spec.n, rng, spec.scale);
    }
    throw spec_error("unknown instance kind");
}

inline InstanceKind parse_kind(const std::string& name) {
    if (name == "convex-random") return InstanceKind::ConvexRandom;
    if (name == "regular-ngon") return InstanceKind::RegularNgon;
    if (name == "symmetric-convex") return InstanceKind::SymmetricConvex;
    if (name == "grid") return InstanceKind::GridKind;
    if (name == "general-random") return InstanceKind::GeneralRandom;
    throw spec_error("unknown instance kind: " + name);
}

} // namespace deg3span
