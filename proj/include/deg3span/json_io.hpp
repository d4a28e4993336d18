#pragma once

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "generate.hpp"
#include "graph.hpp"
#include "grid_spanner.hpp"
#include "verifier.hpp"

namespace deg3span {

using nlohmann::json;

// payload schemas:
//   points {"points": [[x, y], ...]}
//   grid   {"xs": [...], "ys": [...]}            both strictly increasing
//   graph  {"vertices": [[x, y], ...], "edges": [[i, j], ...], "steiner": [bool, ...]?}
//   report {"max_degree": int, "is_plane": bool, "stretch": float|null,
//           "witness": [i, j], "connected": bool}
// Doubles are emitted as the shortest decimal that parses back to the same
// bits, so serialize/parse round-trips are exact.

inline json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

namespace detail {

inline double json_coord(const json& v) {
    if (!v.is_number()) throw input_error("coordinate is not a number");
    return v.get<double>();
}

inline Point json_point(const json& v) {
    if (!v.is_array() || v.size() != 2) throw input_error("point must be a [x, y] pair");
    return {json_coord(v[0]), json_coord(v[1])};
}

} // namespace detail

inline PointSet read_points(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw input_error("expected a points payload: {\"points\": [[x, y], ...]}");
    PointSet out;
    for (const auto& v : j["points"]) out.push_back(detail::json_point(v));
    validate_point_set(out);
    return out;
}

inline json write_points(const PointSet& s) {
    json arr = json::array();
    for (const Point& p : s) arr.push_back(json::array({p.x, p.y}));
    return json{{"points", arr}};
}

inline Grid read_grid(const json& j) {
    if (!j.is_object() || !j.contains("xs") || !j.contains("ys"))
        throw input_error("expected a grid payload: {\"xs\": [...], \"ys\": [...]}");
    Grid g;
    for (const auto& v : j["xs"]) g.xs.push_back(detail::json_coord(v));
    for (const auto& v : j["ys"]) g.ys.push_back(detail::json_coord(v));
    validate_grid(g);
    return g;
}

inline json write_grid(const Grid& g) {
    return json{{"xs", g.xs}, {"ys", g.ys}};
}

inline GeometricGraph read_graph(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw input_error("expected a graph payload: {\"vertices\": [...], \"edges\": [...]}");
    GeometricGraph g;
    for (const auto& v : j["vertices"]) g.points.push_back(detail::json_point(v));
    validate_point_set(g.points);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw input_error("edge must be an [i, j] index pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("steiner")) {
        for (const auto& b : j["steiner"]) {
            if (!b.is_boolean()) throw input_error("steiner mask must hold booleans");
            g.steiner.push_back(b.get<bool>());
        }
    }
    g.check_indices();
    size_t before = g.edges.size();
    g.normalize();
    if (g.edges.size() != before) throw input_error("graph contains duplicate edges");
    return g;
}

inline json write_graph(const GeometricGraph& g) {
    json verts = json::array();
    for (const Point& p : g.points) verts.push_back(json::array({p.x, p.y}));
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back(json::array({e.first, e.second}));
    json out{{"vertices", verts}, {"edges", edges}};
    if (!g.steiner.empty()) out["steiner"] = g.steiner;
    return out;
}

inline json write_report(const SpannerReport& r) {
    json out;
    out["max_degree"] = r.max_degree;
    out["is_plane"] = r.is_plane;
    if (!r.is_plane && r.plane_witness) {
        const auto& [e1, e2] = *r.plane_witness;
        out["plane_witness"] = json::array({json::array({e1.first, e1.second}),
                                            json::array({e2.first, e2.second})});
    }
    out["connected"] = r.connected;
    if (r.connected)
        out["stretch"] = r.stretch;
    else
        out["stretch"] = nullptr;
    out["witness"] = json::array({r.witness.first, r.witness.second});
    return out;
}

enum class PayloadKind { Points, GridPayload, Graph };

inline PayloadKind detect_payload(const json& j) {
    if (j.is_object()) {
        if (j.contains("points")) return PayloadKind::Points;
        if (j.contains("xs") && j.contains("ys")) return PayloadKind::GridPayload;
        if (j.contains("vertices") && j.contains("edges")) return PayloadKind::Graph;
    }
    throw input_error("unrecognized payload: expected points, grid, or graph JSON");
}

} // namespace deg3span
