#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "deg3span/convex_spanner.hpp"
#include "deg3span/generate.hpp"
#include "deg3span/verifier.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace deg3span;
using std::numbers::pi;

namespace {

PointSet regular_ngon(int n) {
    InstanceSpec spec;
    spec.kind = InstanceKind::RegularNgon;
    spec.n = n;
    return std::get<PointSet>(generate(spec));
}

bool is_a_matching(const std::vector<Edge>& edges) {
    std::set<int> seen;
    for (const Edge& e : edges) {
        if (seen.count(e.first) || seen.count(e.second)) return false;
        seen.insert(e.first);
        seen.insert(e.second);
    }
    return true;
}

} // namespace

TEST_CASE("matching base cases from the algorithm definition") {
    PointSet s{{0, 1}, {0, 0}, {3, 0}};
    CHECK(matching({0}, {1, 2}, s) == std::vector<Edge>{{0, 1}});
    CHECK(matching({}, {1, 2}, s).empty());
    CHECK(matching({0}, {}, s).empty());
}

TEST_CASE("matching breaks the distance tie lexicographically") {
    PointSet s{{0, 1}, {2, 1}, {0, 0}, {2, 0}};
    std::vector<Edge> m = matching({0, 1}, {2, 3}, s);
    std::sort(m.begin(), m.end());
    CHECK(m == std::vector<Edge>{{0, 2}, {1, 3}});
}

TEST_CASE("matching validates its preconditions") {
    // (1,1) falls inside the triangle of the rest: not convex
    PointSet bad{{0, 0}, {4, 0}, {0, 4}, {1, 1}};
    CHECK_THROWS_AS(matching({0, 1}, {2, 3}, bad), not_convex_error);
    // interleaved square diagonals: convex but not linearly separated
    PointSet square{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(matching({0, 1}, {2, 3}, square), not_separated_error);
    // a vertex shared between the chains duplicates a point
    PointSet tri{{0, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(matching({0, 1}, {1, 2}, tri), input_error);
}

TEST_CASE("matching agrees with the position-split recursion on random arcs") {
    Rng rng(333);
    for (int it = 0; it < 120; ++it) {
        PointSet s = corpus::convex_points(4 + (int)(rng.next() % 30), 1000 + it);
        auto [c1, c2] = corpus::arc_split(s, rng);
        std::vector<Edge> got = matching(c1, c2, s);
        std::sort(got.begin(), got.end());
        CHECK(got == oracle::matching_by_position(c1, c2, s));
        CHECK(is_a_matching(got));
    }
}

TEST_CASE("convex spanner of the unit square") {
    ConvexSpanner sp = build_convex_spanner({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(sp.graph.edges.size() == 5);
    CHECK(sp.diametral == std::pair<int, int>(0, 2));
    // the matching edge joins the two non-diametral corners
    CHECK(std::count(sp.graph.edges.begin(), sp.graph.edges.end(), Edge{1, 3}) == 1);
    SpannerReport rep = verify(sp.graph);
    CHECK(rep.is_plane);
    CHECK(rep.max_degree == 3);
    CHECK(std::abs(rep.stretch - std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("convex spanner of the regular 23-gon sits between the known bounds") {
    ConvexSpanner sp = build_convex_spanner(regular_ngon(23));
    SpannerReport rep = verify(sp.graph);
    CHECK(rep.is_plane);
    CHECK(rep.max_degree <= 3);
    CHECK(rep.stretch >= 1.4308);
    CHECK(rep.stretch <= 5.188790205 + 1e-9);
}

TEST_CASE("convex spanner of the regular hexagon") {
    ConvexSpanner sp = build_convex_spanner(regular_ngon(6));
    CHECK(sp.graph.edges.size() == 8); // 6 hull + 2 matching
    SpannerReport rep = verify(sp.graph);
    CHECK(rep.is_plane);
    CHECK(rep.max_degree <= 3);
}

TEST_CASE("convex spanner degenerate sizes") {
    ConvexSpanner one = build_convex_spanner({{2, 3}});
    CHECK(one.graph.edges.empty());
    ConvexSpanner two = build_convex_spanner({{0, 0}, {1, 0}});
    CHECK(two.graph.edges.size() == 1);
    CHECK(two.diametral == std::pair<int, int>(0, 1));
    ConvexSpanner tri = build_convex_spanner({{0, 0}, {1, 0}, {0, 1}});
    CHECK(tri.graph.edges.size() == 3);
    CHECK_THROWS_AS(build_convex_spanner({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), not_convex_error);
}

TEST_CASE("convex spanner meets its stretch and degree bounds across a corpus") {
    const double bound = (3.0 + 4.0 * pi) / 3.0;
    Rng rng(444);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + (int)(rng.next() % 60);
        PointSet s = corpus::convex_points(n, 2000 + it);
        ConvexSpanner sp = build_convex_spanner(s);
        SpannerReport rep = verify(sp.graph);
        CHECK(rep.is_plane);
        CHECK(rep.max_degree <= 3);
        CHECK(rep.stretch <= bound + 1e-9);
        std::vector<int> deg = sp.graph.degrees();
        CHECK(deg[sp.diametral.first] <= 2);
        CHECK(deg[sp.diametral.second] <= 2);
    }
}

TEST_CASE("centrally symmetric inputs stay under pi + 1") {
    for (int it = 0; it < 25; ++it) {
        PointSet s = corpus::symmetric_points(6 + 2 * (it % 20), 3000 + it);
        REQUIRE(is_centrally_symmetric(s));
        SpannerReport rep = verify(build_convex_spanner(s).graph);
        CHECK(rep.is_plane);
        CHECK(rep.max_degree <= 3);
        CHECK(rep.stretch <= pi + 1.0 + 1e-9);
    }
}

TEST_CASE("identical input yields an identical edge set") {
    PointSet s = corpus::convex_points(31, 77);
    CHECK(build_convex_spanner(s).graph.edges == build_convex_spanner(s).graph.edges);
}

TEST_CASE("chain stretch examples") {
    PointSet line{{0, 0}, {1, 0}, {2, 0}};
    CHECK(chain_stretch({0, 1, 2}, line).value == 1.0);

    PointSet corner{{0, 0}, {1, 0}, {1, 1}};
    ChainStretch cs = chain_stretch({0, 1, 2}, corner);
    CHECK(cs.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cs.witness == std::pair<int, int>(0, 2));

    CHECK_THROWS_AS(chain_stretch({0}, line), input_error);
}

TEST_CASE("chain stretch agrees with naive summation") {
    Rng rng(555);
    for (int it = 0; it < 50; ++it) {
        corpus::ChainInstance inst = corpus::lune_chain(rng, 12);
        double got = chain_stretch(inst.chain, inst.points).value;
        double want = oracle::chain_stretch_naive(inst.chain, inst.points);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("half-circle discretization approaches pi/2 from below") {
    corpus::ChainInstance inst = corpus::half_circle_chain(1000);
    double v = chain_stretch(inst.chain, inst.points).value;
    CHECK(v >= 1.5702);
    CHECK(v <= pi / 2.0);
}

TEST_CASE("lune-confined chains stay under 2*pi/3, disk-confined under pi/2") {
    Rng rng(666);
    for (int it = 0; it < 60; ++it) {
        corpus::ChainInstance lune = corpus::lune_chain(rng, 3 + (int)(rng.next() % 25));
        CHECK(chain_stretch(lune.chain, lune.points).value <= 2.0 * pi / 3.0 + 1e-9);
        corpus::ChainInstance disk = corpus::disk_chain(rng, 3 + (int)(rng.next() % 25));
        CHECK(chain_stretch(disk.chain, disk.points).value <= pi / 2.0 + 1e-9);
    }
}

TEST_CASE("double chain with its matching is a (2*tau+1)-spanner") {
    Rng rng(777);
    for (int it = 0; it < 40; ++it) {
        PointSet s = corpus::convex_points(6 + (int)(rng.next() % 30), 4000 + it);
        auto [c1, c2] = corpus::arc_split(s, rng);
        if (c1.size() < 2 || c2.size() < 2) continue;

        GeometricGraph g;
        g.points = s;
        for (size_t i = 1; i < c1.size(); ++i) g.add_edge(c1[i - 1], c1[i]);
        for (size_t i = 1; i < c2.size(); ++i) g.add_edge(c2[i - 1], c2[i]);
        std::vector<Edge> m = matching(c1, c2, s);
        CHECK(is_a_matching(m));
        for (const Edge& e : m) g.add_edge(e.first, e.second);
        g.normalize();

        double tau = std::max(chain_stretch(c1, s).value, chain_stretch(c2, s).value);
        SpannerReport rep = verify(g);
        CHECK(rep.is_plane);
        CHECK(rep.connected);
        CHECK(rep.stretch <= 2.0 * tau + 1.0 + 1e-9);

        std::vector<int> deg = g.degrees();
        for (int v : {c1.front(), c1.back(), c2.front(), c2.back()}) CHECK(deg[v] <= 2);
        for (int d : deg) CHECK(d <= 3);
    }
}
