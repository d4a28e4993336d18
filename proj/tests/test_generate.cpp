#include <doctest.h>

#include <algorithm>
#include <variant>

#include "deg3span/generate.hpp"
#include "deg3span/geometry.hpp"
#include "deg3span/hull.hpp"

using namespace deg3span;

namespace {

PointSet points_of(const Instance& inst) { return std::get<PointSet>(inst); }

PointSet make(InstanceKind kind, int n, uint64_t seed, double scale = 1.0) {
    InstanceSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.seed = seed;
    spec.scale = scale;
    return points_of(generate(spec));
}

} // namespace

TEST_CASE("a regular 4-gon is the exact unit square") {
    PointSet s = make(InstanceKind::RegularNgon, 4, 0);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == Point{0.0, 0.0});
    CHECK(s[1] == Point{1.0, 0.0});
    CHECK(s[2] == Point{1.0, 1.0});
    CHECK(s[3] == Point{0.0, 1.0});

    PointSet scaled = make(InstanceKind::RegularNgon, 4, 0, 2.5);
    CHECK(scaled[2] == Point{2.5, 2.5});
}

TEST_CASE("regular n-gons are convex and symmetric for even n") {
    for (int n : {5, 6, 12, 23, 64}) {
        PointSet s = make(InstanceKind::RegularNgon, n, 0);
        REQUIRE((int)s.size() == n);
        CHECK(is_convex_position(s));
        if (n % 2 == 0) CHECK(is_centrally_symmetric(s));
    }
}

TEST_CASE("convex-random sets are in convex position at every size") {
    for (int n : {4, 7, 16, 100}) {
        PointSet s = make(InstanceKind::ConvexRandom, n, 7);
        REQUIRE((int)s.size() == n);
        validate_point_set(s);
        CHECK(is_convex_position(s));
    }
}

TEST_CASE("symmetric-convex sets negate onto themselves exactly") {
    for (int n : {4, 10, 30}) {
        PointSet s = make(InstanceKind::SymmetricConvex, n, 11);
        REQUIRE((int)s.size() == n);
        CHECK(is_convex_position(s));
        CHECK(is_centrally_symmetric(s));

        PointSet neg;
        for (const Point& p : s) neg.push_back({-p.x, -p.y});
        auto lt = [](const Point& a, const Point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        };
        std::sort(s.begin(), s.end(), lt);
        std::sort(neg.begin(), neg.end(), lt);
        CHECK(s == neg); // bitwise symmetry, not approximate
    }
}

TEST_CASE("symmetric-convex rejects odd sizes") {
    InstanceSpec spec;
    spec.kind = InstanceKind::SymmetricConvex;
    spec.n = 7;
    CHECK_THROWS_AS(generate(spec), spec_error);
}

TEST_CASE("general-random sets avoid duplicates and collinear triples") {
    PointSet s = make(InstanceKind::GeneralRandom, 40, 3);
    REQUIRE(s.size() == 40);
    validate_point_set(s);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            for (size_t k = j + 1; k < s.size(); ++k)
                CHECK(orientation(s[i], s[j], s[k]) != 0);
}

TEST_CASE("grids come out strictly increasing with bounded gaps") {
    InstanceSpec spec;
    spec.kind = InstanceKind::GridKind;
    spec.rows = 6;
    spec.cols = 9;
    spec.seed = 21;
    spec.scale = 0.5;
    Grid g = std::get<Grid>(generate(spec));
    REQUIRE(g.rows() == 6);
    REQUIRE(g.cols() == 9);
    CHECK(g.xs[0] == 0.0);
    CHECK(g.ys[0] == 0.0);
    for (size_t i = 1; i < g.xs.size(); ++i) {
        double gap = g.xs[i] - g.xs[i - 1];
        CHECK(gap >= 1.0 * spec.scale);
        CHECK(gap <= 10.0 * spec.scale);
    }
    for (size_t i = 1; i < g.ys.size(); ++i) CHECK(g.ys[i] > g.ys[i - 1]);
}

TEST_CASE("generation is deterministic in the seed") {
    for (InstanceKind kind : {InstanceKind::ConvexRandom, InstanceKind::SymmetricConvex,
                              InstanceKind::GeneralRandom}) {
        PointSet a = make(kind, 24, 99);
        PointSet b = make(kind, 24, 99);
        CHECK(a == b);
        PointSet c = make(kind, 24, 100);
        CHECK(a != c);
    }
}

TEST_CASE("bad specs are rejected") {
    InstanceSpec spec;
    spec.n = 0;
    CHECK_THROWS_AS(generate(spec), spec_error);
    spec.n = 5;
    spec.scale = 0.0;
    CHECK_THROWS_AS(generate(spec), spec_error);
    spec.scale = -1.0;
    CHECK_THROWS_AS(generate(spec), spec_error);
}

TEST_CASE("kind names parse and unknown names throw") {
    CHECK(parse_kind("convex-random") == InstanceKind::ConvexRandom);
    CHECK(parse_kind("regular-ngon") == InstanceKind::RegularNgon);
    CHECK(parse_kind("symmetric-convex") == InstanceKind::SymmetricConvex);
    CHECK(parse_kind("grid") == InstanceKind::GridKind);
    CHECK(parse_kind("general-random") == InstanceKind::GeneralRandom);
    CHECK_THROWS_AS(parse_kind("hexagonal"), spec_error);
}
