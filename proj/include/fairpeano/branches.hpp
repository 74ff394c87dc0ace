#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "fairpeano/square_lattice.hpp"

namespace fairpeano {

// Tree branches grown from anchors on the left column and top row. Each
// path repeats the anchored node's right/down choice until it falls off the
// bottom or right boundary, so it is a deterministic function of the tree.
struct BranchBundle {
    std::vector<Point> anchors;
    std::vector<std::vector<std::pair<int, int>>> path_nodes;  // (i,j) per step
    std::vector<std::vector<Point>> paths;
    std::vector<Point> points;  // union of all path vertices
};

// Anchor slots in clockwise order: left column (1,1)..(1,n-1) bottom to
// top, then top row (2,n-1)..(n-1,n-1) left to right. 2n-3 slots; the arc
// midpoint is the top-left interior corner, which is where a single anchor
// lands.
inline std::vector<std::pair<int, int>> anchor_slots(const SquareLattice& lat) {
    std::vector<std::pair<int, int>> slots;
    slots.reserve(2 * lat.n - 3);
    for (int j = 1; j <= lat.n - 1; ++j) slots.push_back({1, j});
    for (int i = 2; i <= lat.n - 1; ++i) slots.push_back({i, lat.n - 1});
    return slots;
}

inline BranchBundle branch_paths(const SquareLattice& lat, const SpanningTree& t, double m) {
    if (!(m >= 1.0)) throw InputError("branch_paths needs m >= 1");
    const std::vector<std::pair<int, int>> slots = anchor_slots(lat);
    const long long K = (long long)slots.size();
    const long long want = std::min((long long)std::floor(m), K);

    // slot closest to fraction j/(want+1) of the arc, ties to the earlier
    // (clockwise-first) slot: round half down of j*(K-1)/(want+1)
    std::vector<int> chosen;
    for (long long j = 1; j <= want; ++j) {
        const long long p = j * (K - 1);
        const long long q = want + 1;
        const long long idx = (2 * p + q - 1) / (2 * q);
        if (chosen.empty() || chosen.back() != (int)idx) chosen.push_back((int)idx);
    }

    BranchBundle bundle;
    for (const int idx : chosen) {
        auto [i, j] = slots[idx];
        bundle.anchors.push_back(lat.primal_position(i, j));
        std::vector<std::pair<int, int>> nodes;
        std::vector<Point> pts;
        for (;;) {
            nodes.push_back({i, j});
            pts.push_back(lat.primal_position(i, j));
            if (i == lat.n || j == 0) break;
            if (tree_contains(t, lat.grid.right_edge(lat.grid.node_index(i, j))))
                ++i;
            else
                --j;
        }
        bundle.points.insert(bundle.points.end(), pts.begin(), pts.end());
        bundle.path_nodes.push_back(std::move(nodes));
        bundle.paths.push_back(std::move(pts));
    }
    return bundle;
}

// Anti-diagonal segments x+y = level through each anchor, clipped to the
// unit square and sampled at the given resolution.
struct DiagonalLines {
    std::vector<Segment> segments;
    std::vector<Point> samples;
};

inline DiagonalLines diagonal_lines(const SquareLattice&, const std::vector<Point>& anchors,
                                    double resolution) {
    if (resolution <= 0.0) throw InputError("diagonal_lines needs a positive resolution");
    DiagonalLines lines;
    for (const Point& z : anchors) {
        const double s = z.x + z.y;
        const Point p0{std::max(0.0, s - 1.0), std::min(s, 1.0)};
        const Point p1{std::min(s, 1.0), std::max(0.0, s - 1.0)};
        lines.segments.push_back({p0, p1});
        const double len = dist(p0, p1);
        const int count = std::max(1, (int)std::ceil(len / resolution));
        for (int i = 0; i <= count; ++i) {
            const double f = double(i) / count;
            lines.samples.push_back(
                Point{p0.x + f * (p1.x - p0.x), p0.y + f * (p1.y - p0.y)});
        }
    }
    return lines;
}

}  // namespace fairpeano
