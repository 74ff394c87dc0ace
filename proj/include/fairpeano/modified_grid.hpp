#pragma once

#include <array>
#include <vector>

#include "fairpeano/graph.hpp"

namespace fairpeano {

// m x n grid of nodes plus one absorbing vertex v0. Node (i,j) with
// i in 1..m (column, left to right) and j in 1..n (row, bottom to top) sits
// at index (j-1)*m + (i-1); v0 comes last at index m*n. Every node owns the
// pair E_v = {edge to the right, edge below}: rightmost nodes point right
// into v0, bottom-row nodes point down into v0, so the bottom-right node is
// joined to v0 by two parallel edges. Edge indices: right edge of node v is
// 2v, down edge is 2v+1.
struct ModifiedGrid {
    int m = 0;
    int n = 0;
    Graph graph;

    int node_index(int i, int j) const { return (j - 1) * m + (i - 1); }
    int node_col(int v) const { return v % m + 1; }
    int node_row(int v) const { return v / m + 1; }
    int v0() const { return m * n; }
    int node_count() const { return m * n; }

    int right_edge(int v) const { return 2 * v; }
    int down_edge(int v) const { return 2 * v + 1; }
    std::array<int, 2> partition_cell(int v) const { return {2 * v, 2 * v + 1}; }
};

inline ModifiedGrid build_modified_grid(int m, int n) {
    if (m < 1 || n < 1) throw InputError("modified grid needs m, n >= 1");
    ModifiedGrid grid;
    grid.m = m;
    grid.n = n;
    const int v0 = m * n;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * m * n);
    for (int v = 0; v < m * n; ++v) {
        const int i = grid.node_col(v), j = grid.node_row(v);
        edges.push_back({v, i < m ? grid.node_index(i + 1, j) : v0});
        edges.push_back({v, j > 1 ? grid.node_index(i, j - 1) : v0});
    }
    grid.graph = build_graph(m * n + 1, std::move(edges));
    return grid;
}

}  // namespace fairpeano
