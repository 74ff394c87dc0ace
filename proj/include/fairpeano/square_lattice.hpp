#pragma once

#include <utility>
#include <vector>

#include "fairpeano/fair_trees.hpp"
#include "fairpeano/geometry.hpp"
#include "fairpeano/grid.hpp"
#include "fairpeano/modified_grid.hpp"

namespace fairpeano {

using Segment = std::pair<Point, Point>;

// The unit-square picture behind a modified grid. Primal vertices are
// (i/n, j/n) with i in 1..n and j in 0..n-1 (right and bottom boundaries
// carry vertices, left and top do not). Interior nodes, the ones with a
// right/down choice, are exactly the vertices of an (n-1)x(n-1) modified
// grid once the bottom row and right column are identified into v0. Dual
// vertices sit at cell centers ((2k+1)/(2n), (2l+1)/(2n)), k,l in 0..n-1,
// indexed l*n+k, and the dual graph is a plain n-by-n grid on them.
struct SquareLattice {
    int n = 0;
    ModifiedGrid grid;  // the interior, m = n-1
    Graph dual_graph;   // build_grid_graph(n, n), cell (k,l) at index l*n+k

    Point primal_position(int i, int j) const {
        return Point{double(i) / n, double(j) / n};
    }
    bool is_interior(int i, int j) const { return i >= 1 && i <= n - 1 && j >= 1 && j <= n - 1; }
    // modified-grid node index of interior vertex (i,j)
    int interior_node(int i, int j) const { return grid.node_index(i, j); }

    int dual_index(int k, int l) const { return l * n + k; }
    Point dual_position(int k, int l) const {
        return Point{(2.0 * k + 1.0) / (2.0 * n), (2.0 * l + 1.0) / (2.0 * n)};
    }
};

inline SquareLattice build_square_lattice(int n) {
    if (n < 2) throw InputError("square lattice needs n >= 2 (no interior nodes otherwise)");
    SquareLattice lat;
    lat.n = n;
    lat.grid = build_modified_grid(n - 1, n - 1);
    lat.dual_graph = build_grid_graph(n, n);
    return lat;
}

// Drawn segments of a spanning tree of the interior modified grid. Edge 2v
// is node v's right edge, 2v+1 its down edge; edges into v0 land on the
// right column (i=n) or bottom row (j=0) vertices.
inline std::vector<Segment> tree_segments(const SquareLattice& lat, const SpanningTree& t) {
    std::vector<Segment> segs;
    segs.reserve(t.edge_set.size());
    for (const int e : t.edge_set) {
        const int v = e / 2;
        const int i = lat.grid.node_col(v);
        const int j = lat.grid.node_row(v);
        const Point from = lat.primal_position(i, j);
        const Point to = (e % 2 == 0) ? lat.primal_position(i + 1, j)
                                      : lat.primal_position(i, j - 1);
        segs.push_back({from, to});
    }
    return segs;
}

// The v0 preimage: the bottom-row and right-column boundary edges, which
// connect everything the tree hangs from. 2(n-1) segments.
inline std::vector<Segment> boundary_segments(const SquareLattice& lat) {
    std::vector<Segment> segs;
    segs.reserve(2 * (lat.n - 1));
    for (int i = 1; i <= lat.n - 1; ++i)
        segs.push_back({lat.primal_position(i, 0), lat.primal_position(i + 1, 0)});
    for (int j = 0; j <= lat.n - 2; ++j)
        segs.push_back({lat.primal_position(lat.n, j), lat.primal_position(lat.n, j + 1)});
    return segs;
}

}  // namespace fairpeano
