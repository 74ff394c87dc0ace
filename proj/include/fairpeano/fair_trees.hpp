#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fairpeano/modified_grid.hpp"
#include "fairpeano/rng.hpp"
#include "fairpeano/spanning_tree.hpp"

namespace fairpeano {

// One edge per partition cell, selected by the mask: bit v set means node v
// keeps its right edge, clear means the down edge. Every such choice is a
// spanning tree, which the coin-flip sampler relies on.
inline SpanningTree fair_tree_from_mask(const ModifiedGrid& grid, std::uint64_t mask) {
    std::vector<int> edges;
    edges.reserve(grid.node_count());
    for (int v = 0; v < grid.node_count(); ++v)
        edges.push_back((mask >> v) & 1 ? grid.right_edge(v) : grid.down_edge(v));
    return SpanningTree{std::move(edges)};  // already ascending
}

inline SpanningTree fair_tree_from_choices(const ModifiedGrid& grid,
                                           const std::vector<char>& take_right) {
    std::vector<int> edges;
    edges.reserve(grid.node_count());
    for (int v = 0; v < grid.node_count(); ++v)
        edges.push_back(take_right[v] ? grid.right_edge(v) : grid.down_edge(v));
    return SpanningTree{std::move(edges)};
}

// independent fair coin per node, heads = right
inline SpanningTree sample_fair_tree(const ModifiedGrid& grid, RandomStream& rng) {
    std::vector<char> take_right(grid.node_count());
    for (int v = 0; v < grid.node_count(); ++v) take_right[v] = rng.coin();
    return fair_tree_from_choices(grid, take_right);
}

inline std::vector<int> cell_usage_counts(const ModifiedGrid& grid, const SpanningTree& t) {
    std::vector<int> count(grid.node_count(), 0);
    for (const int e : t.edge_set) ++count[e / 2];  // edge 2v, 2v+1 belong to node v
    return count;
}

inline bool is_fair_tree(const ModifiedGrid& grid, const SpanningTree& t) {
    if (!is_spanning_tree(grid.graph, t))
        throw InputError("is_fair_tree needs a spanning tree of the modified grid");
    for (const int c : cell_usage_counts(grid, t))
        if (c != 1) return false;
    return true;
}

// swap each node's choice for the other edge of its cell; an involution, and
// the result is the complement edge set
inline SpanningTree partner_tree(const ModifiedGrid& grid, const SpanningTree& t) {
    if (!is_fair_tree(grid, t)) throw InputError("partner_tree needs a fair tree");
    std::vector<int> edges;
    edges.reserve(grid.node_count());
    for (const int e : t.edge_set) edges.push_back(e ^ 1);
    return SpanningTree{std::move(edges)};
}

// For a non-fair spanning tree the pigeonhole argument yields a node using
// both of its edges and a node using neither; fair trees yield nothing.
inline std::optional<std::pair<int, int>> forbidden_tree_witness(const ModifiedGrid& grid,
                                                                 const SpanningTree& t) {
    if (!is_spanning_tree(grid.graph, t))
        throw InputError("forbidden_tree_witness needs a spanning tree");
    const std::vector<int> count = cell_usage_counts(grid, t);
    int v_star = -1, v_sub = -1;
    for (int v = 0; v < grid.node_count(); ++v) {
        if (count[v] == 2 && v_star == -1) v_star = v;
        if (count[v] == 0 && v_sub == -1) v_sub = v;
    }
    if (v_star == -1 && v_sub == -1) return std::nullopt;
    return std::make_pair(v_star, v_sub);
}

// complement characterization: E minus a fair tree is again a spanning tree
inline std::vector<int> complement_edges(const ModifiedGrid& grid, const SpanningTree& t) {
    std::vector<char> in(grid.graph.edge_count(), 0);
    for (const int e : t.edge_set) in[e] = 1;
    std::vector<int> out;
    out.reserve(grid.graph.edge_count() - (int)t.edge_set.size());
    for (int e = 0; e < grid.graph.edge_count(); ++e)
        if (!in[e]) out.push_back(e);
    return out;
}

}  // namespace fairpeano
