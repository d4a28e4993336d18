#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "grid_spanner.hpp"

namespace deg3span {

namespace detail {

struct SvgCanvas {
    double min_x = 0.0, min_y = 0.0, span = 1.0;
    double height = 1.0; // viewBox height, for flipping y upward
    std::ostringstream body;

    // fit the viewBox around the drawing with a 5% margin per side
    void fit(const PointSet& pts) {
        if (pts.empty()) return;
        double max_x, max_y;
        min_x = max_x = pts[0].x;
        min_y = max_y = pts[0].y;
        for (const Point& p : pts) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        double w = max_x - min_x, h = max_y - min_y;
        span = std::max({w, h, 1e-9});
        double margin = 0.05 * span;
        min_x -= margin;
        min_y -= margin;
        double vw = w + 2.0 * margin, vh = h + 2.0 * margin;
        span = std::max(vw, vh);
        height = vh;
        header_w = vw;
        header_h = vh;
    }

    double header_w = 1.0, header_h = 1.0;

    double fx(double x) const { return x - min_x; }
    double fy(double y) const { return height - (y - min_y); } // svg y grows downward

    void line(const Point& a, const Point& b, const std::string& color, double width_factor,
              bool dashed = false) {
        body << "  <line x1=\"" << fx(a.x) << "\" y1=\"" << fy(a.y) << "\" x2=\"" << fx(b.x)
             << "\" y2=\"" << fy(b.y) << "\" stroke=\"" << color << "\" stroke-width=\""
             << span * 0.004 * width_factor << "\"";
        if (dashed) body << " stroke-dasharray=\"" << span * 0.01 << "\"";
        body << " />\n";
    }

    void circle(const Point& p, bool filled, const std::string& color) {
        body << "  <circle cx=\"" << fx(p.x) << "\" cy=\"" << fy(p.y) << "\" r=\"" << span * 0.008
             << "\"";
        if (filled)
            body << " fill=\"" << color << "\"";
        else
            body << " fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << span * 0.003
                 << "\"";
        body << " />\n";
    }

    std::string finish() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << header_w << " "
            << header_h << "\">\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

} // namespace detail

// Plain graph rendering: black edges, filled dots for original vertices, open
// circles for Steiner vertices.
inline std::string render_graph_svg(const GeometricGraph& g) {
    detail::SvgCanvas canvas;
    canvas.fit(g.points);
    for (const Edge& e : g.edges)
        canvas.line(g.points[e.first], g.points[e.second], "#222222", 1.0);
    for (int v = 0; v < (int)g.points.size(); ++v)
        canvas.circle(g.points[v], !g.is_steiner(v), "#222222");
    return canvas.finish();
}

inline std::string render_points_svg(const PointSet& pts) {
    detail::SvgCanvas canvas;
    canvas.fit(pts);
    for (const Point& p : pts) canvas.circle(p, true, "#222222");
    return canvas.finish();
}

// Grid rendering. built = false draws the full grid with its edge classes
// (red/blue internal edges, black boundary). built = true draws the
// constructed spanner: surviving blue and boundary edges as usual, re-inserted
// red edges bold, and the missing red edges as thin dashes for orientation.
inline std::string render_grid_svg(const Grid& grid, bool built) {
    detail::SvgCanvas canvas;
    PointSet pts = grid_points(grid);
    canvas.fit(pts);
    auto color_name = [](EdgeColor c) {
        switch (c) {
            case EdgeColor::Red: return "#cc2222";
            case EdgeColor::Blue: return "#2255cc";
            default: return "#222222";
        }
    };
    bool classify = grid.rows() >= 3 && grid.cols() >= 3;
    if (!built) {
        for (const GridEdge& e : grid_edges(grid)) {
            auto [a, b] = grid_edge_vertices(grid, e);
            EdgeColor c = classify ? classify_edge(grid, e) : EdgeColor::Boundary;
            canvas.line(pts[a], pts[b], color_name(c), 1.0);
        }
    } else {
        GeometricGraph spanner = build_grid_spanner(grid);
        std::vector<Edge> present = spanner.edges;
        auto has = [&](Edge key) {
            return std::binary_search(present.begin(), present.end(), key);
        };
        for (const GridEdge& e : grid_edges(grid)) {
            auto [a, b] = grid_edge_vertices(grid, e);
            Edge key{std::min(a, b), std::max(a, b)};
            EdgeColor c = classify ? classify_edge(grid, e) : EdgeColor::Boundary;
            if (c == EdgeColor::Red) {
                if (has(key))
                    canvas.line(pts[a], pts[b], color_name(c), 2.5); // re-inserted: bold
                else
                    canvas.line(pts[a], pts[b], color_name(c), 0.5, true);
            } else {
                canvas.line(pts[a], pts[b], color_name(c), 1.0);
            }
        }
    }
    for (const Point& p : pts) canvas.circle(p, true, "#222222");
    return canvas.finish();
}

} // namespace deg3span
