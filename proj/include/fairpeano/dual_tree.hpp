#pragma once

#include <vector>

#include "fairpeano/square_lattice.hpp"

namespace fairpeano {

struct DualTree {
    std::vector<int> edge_set;  // sorted indices into lat.dual_graph.edges
};

// The dual configuration of a fair tree. A dual edge crosses exactly one
// interior primal edge (the vertical dual through x=(2k+1)/(2n) crosses the
// right edge of node (k,l+1); the horizontal one through y=(2l+1)/(2n)
// crosses the down edge of node (k+1,l+1)) and belongs to the dual tree
// exactly when that primal edge is not in t. Dual edges along the left
// column and top row cross nothing and are always included. Fairness makes
// the count come out to n^2-1 and the result a spanning tree of the dual
// grid; for a non-fair tree the construction breaks, so it is rejected.
inline DualTree dual_tree(const SquareLattice& lat, const SpanningTree& t) {
    if (!is_fair_tree(lat.grid, t))
        throw InputError("dual tree construction needs a fair tree");
    const int n = lat.n;
    DualTree d;
    d.edge_set.reserve(n * n - 1);
    for (int e = 0; e < lat.dual_graph.edge_count(); ++e) {
        const auto [u, v] = lat.dual_graph.edges[e];
        const int k = u % n, l = u / n;
        bool in;
        if (v == u + 1) {  // horizontal, cells (k,l)-(k+1,l)
            in = (l == n - 1) ||
                 tree_contains(t, lat.grid.right_edge(lat.grid.node_index(k + 1, l + 1)));
        } else {  // vertical, cells (k,l)-(k,l+1)
            in = (k == 0) ||
                 !tree_contains(t, lat.grid.right_edge(lat.grid.node_index(k, l + 1)));
        }
        if (in) d.edge_set.push_back(e);
    }
    return d;
}

inline std::vector<Segment> dual_segments(const SquareLattice& lat, const DualTree& d) {
    std::vector<Segment> segs;
    segs.reserve(d.edge_set.size());
    for (const int e : d.edge_set) {
        const auto [u, v] = lat.dual_graph.edges[e];
        segs.push_back({lat.dual_position(u % lat.n, u / lat.n),
                        lat.dual_position(v % lat.n, v / lat.n)});
    }
    return segs;
}

}  // namespace fairpeano
