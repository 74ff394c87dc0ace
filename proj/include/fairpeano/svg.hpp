#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fairpeano/dual_tree.hpp"
#include "fairpeano/peano.hpp"
#include "fairpeano/square_lattice.hpp"

namespace fairpeano {

enum class ColorMode { plain, closest_boundary_vertex };

inline ColorMode parse_color_mode(const std::string& s) {
    if (s == "plain") return ColorMode::plain;
    if (s == "closest_boundary_vertex") return ColorMode::closest_boundary_vertex;
    throw InputError("unknown color mode: " + s);
}

struct RenderScene {
    const SquareLattice* lattice = nullptr;
    const SpanningTree* tree = nullptr;
    const DualTree* dual = nullptr;
    const LatticeCurve* curve = nullptr;
    ColorMode color_mode = ColorMode::plain;
    double canvas = 800.0;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// golden-angle hue rotation keeps nearby indices visually far apart
inline std::string hue_color(int idx) {
    const double h = std::fmod(idx * 137.50776405316067, 360.0) / 60.0;
    const double s = 0.65, v = 0.85;
    const int sector = (int)h % 6;
    const double f = h - std::floor(h);
    const double p = v * (1 - s), q = v * (1 - s * f), t = v * (1 - s * (1 - f));
    double r, g, b;
    switch (sector) {
        case 0: r = v, g = t, b = p; break;
        case 1: r = q, g = v, b = p; break;
        case 2: r = p, g = v, b = t; break;
        case 3: r = p, g = q, b = v; break;
        case 4: r = t, g = p, b = v; break;
        default: r = v, g = p, b = q; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", (int)std::lround(r * 255),
                  (int)std::lround(g * 255), (int)std::lround(b * 255));
    return buf;
}

struct Mapper {
    double canvas, margin, scale;
    explicit Mapper(double c) : canvas(c), margin(0.05 * c), scale(0.9 * c) {}
    double px(double x) const { return margin + x * scale; }
    double py(double y) const { return canvas - (margin + y * scale); }
};

inline void append_segment_path(std::string& out, const Mapper& map,
                                const std::vector<Segment>& segs, const std::string& stroke,
                                double width) {
    if (segs.empty()) return;
    out += "<path fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) +
           "\" stroke-linecap=\"round\" d=\"";
    for (const Segment& s : segs)
        out += "M" + fmt(map.px(s.first.x)) + " " + fmt(map.py(s.first.y)) + "L" +
               fmt(map.px(s.second.x)) + " " + fmt(map.py(s.second.y));
    out += "\"/>\n";
}

// Where does the tree send each interior node? Follow the right/down
// choices to the bottom or right boundary; bottom vertex (i,0) gets index
// i-1, right vertex (n,j) gets (n-2)+j. Memoized so the total work is
// linear.
inline std::vector<int> boundary_targets(const SquareLattice& lat, const SpanningTree& t) {
    const int n = lat.n;
    std::vector<int> dest(lat.grid.node_count(), -1);
    std::vector<int> chain;
    for (int v0 = 0; v0 < lat.grid.node_count(); ++v0) {
        if (dest[v0] >= 0) continue;
        chain.clear();
        int i = lat.grid.node_col(v0), j = lat.grid.node_row(v0);
        int target = -1;
        for (;;) {
            const int v = lat.grid.node_index(i, j);
            if (dest[v] >= 0) {
                target = dest[v];
                break;
            }
            chain.push_back(v);
            if (tree_contains(t, lat.grid.right_edge(v))) {
                ++i;
                if (i == n) {
                    target = (n - 2) + j;
                    break;
                }
            } else {
                --j;
                if (j == 0) {
                    target = i - 1;
                    break;
                }
            }
        }
        for (const int v : chain) dest[v] = target;
    }
    return dest;
}

}  // namespace detail

// Deterministic SVG of a lattice scene: boundary plus tree in black (or in
// boundary-target colors), dual tree in gray, curve in crimson. With no
// tree, just the lattice dots.
inline std::string render_svg(const RenderScene& scene) {
    if (!scene.lattice) throw InputError("render scene needs a lattice");
    if (scene.canvas < 64.0) throw InputError("render canvas must be at least 64 px");
    if ((scene.dual || scene.curve || scene.color_mode != ColorMode::plain) && !scene.tree)
        throw InputError("dual, curve, and coloring need a tree in the scene");
    if (scene.curve && scene.curve->n != scene.lattice->n)
        throw InputError("curve and lattice sizes disagree");
    const SquareLattice& lat = *scene.lattice;
    const detail::Mapper map(scene.canvas);
    const double cell = map.scale / lat.n;
    const double tree_width = std::clamp(0.35 * cell, 0.5, 3.0);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(scene.canvas) +
           "\" height=\"" + detail::fmt(scene.canvas) + "\" viewBox=\"0 0 " +
           detail::fmt(scene.canvas) + " " + detail::fmt(scene.canvas) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (!scene.tree) {
        const double r = std::clamp(0.08 * cell, 0.6, 2.5);
        for (int i = 1; i <= lat.n; ++i)
            for (int j = 0; j <= lat.n - 1; ++j) {
                const Point p = lat.primal_position(i, j);
                out += "<circle cx=\"" + detail::fmt(map.px(p.x)) + "\" cy=\"" +
                       detail::fmt(map.py(p.y)) + "\" r=\"" + detail::fmt(r) +
                       "\" fill=\"black\"/>\n";
            }
        for (int k = 0; k < lat.n; ++k)
            for (int l = 0; l < lat.n; ++l) {
                const Point p = lat.dual_position(k, l);
                out += "<circle cx=\"" + detail::fmt(map.px(p.x)) + "\" cy=\"" +
                       detail::fmt(map.py(p.y)) + "\" r=\"" + detail::fmt(0.7 * r) +
                       "\" fill=\"#bbbbbb\"/>\n";
            }
        out += "</svg>\n";
        return out;
    }

    detail::append_segment_path(out, map, boundary_segments(lat), "black", tree_width);
    if (scene.color_mode == ColorMode::plain) {
        detail::append_segment_path(out, map, tree_segments(lat, *scene.tree), "black",
                                    tree_width);
    } else {
        if (!is_fair_tree(lat.grid, *scene.tree))
            throw InputError("boundary coloring needs a fair tree");
        const std::vector<int> dest = detail::boundary_targets(lat, *scene.tree);
        // one path per edge; the owner node's target picks the hue
        for (const int e : scene.tree->edge_set) {
            const int v = e / 2;
            const int i = lat.grid.node_col(v), j = lat.grid.node_row(v);
            const Point a = lat.primal_position(i, j);
            const Point b = (e % 2 == 0) ? lat.primal_position(i + 1, j)
                                         : lat.primal_position(i, j - 1);
            out += "<path fill=\"none\" stroke=\"" + detail::hue_color(dest[v]) +
                   "\" stroke-width=\"" + detail::fmt(tree_width) +
                   "\" stroke-linecap=\"round\" d=\"M" + detail::fmt(map.px(a.x)) + " " +
                   detail::fmt(map.py(a.y)) + "L" + detail::fmt(map.px(b.x)) + " " +
                   detail::fmt(map.py(b.y)) + "\"/>\n";
        }
    }
    if (scene.dual)
        detail::append_segment_path(out, map, dual_segments(lat, *scene.dual), "#999999",
                                    0.7 * tree_width);
    if (scene.curve && !scene.curve->points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"" +
               detail::fmt(0.55 * tree_width) + "\" points=\"";
        for (const Point& p : scene.curve->points)
            out += detail::fmt(map.px(p.x)) + "," + detail::fmt(map.py(p.y)) + " ";
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

// Fallback picture for a rectangular modified-grid tree: nodes on an m x n
// array, chosen edges drawn, edges into v0 drawn as stubs leaving through
// the right or bottom side.
inline std::string render_grid_svg(const ModifiedGrid& grid, const SpanningTree& t,
                                   double canvas = 800.0) {
    if (canvas < 64.0) throw InputError("render canvas must be at least 64 px");
    const detail::Mapper map(canvas);
    auto pos = [&](double i, double j) {
        return Point{i / (grid.m + 1.0), j / (grid.n + 1.0)};
    };
    std::vector<Segment> segs;
    for (const int e : t.edge_set) {
        const int v = e / 2;
        const double i = grid.node_col(v), j = grid.node_row(v);
        if (e % 2 == 0)
            segs.push_back({pos(i, j), pos(i + 1, j)});
        else
            segs.push_back({pos(i, j), pos(i, j - 1)});
    }
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(canvas) +
           "\" height=\"" + detail::fmt(canvas) + "\" viewBox=\"0 0 " + detail::fmt(canvas) +
           " " + detail::fmt(canvas) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    detail::append_segment_path(out, map, segs, "black", 2.0);
    for (int v = 0; v < grid.node_count(); ++v) {
        const Point p = pos(grid.node_col(v), grid.node_row(v));
        out += "<circle cx=\"" + detail::fmt(map.px(p.x)) + "\" cy=\"" +
               detail::fmt(map.py(p.y)) + "\" r=\"3.000\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace fairpeano
