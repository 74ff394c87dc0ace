#pragma once

#include <algorithm>
#include <vector>

#include "fairpeano/graph.hpp"

namespace fairpeano {

// Edge-index set into a parent graph. Trees compare equal exactly when their
// sorted index sets match, so parallel edges give distinct trees.
struct SpanningTree {
    std::vector<int> edge_set;  // sorted ascending

    friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
        return a.edge_set == b.edge_set;
    }
    friend bool operator<(const SpanningTree& a, const SpanningTree& b) {
        return a.edge_set < b.edge_set;
    }
};

inline SpanningTree make_tree(std::vector<int> edges) {
    std::sort(edges.begin(), edges.end());
    return SpanningTree{std::move(edges)};
}

inline bool tree_contains(const SpanningTree& t, int e) {
    return std::binary_search(t.edge_set.begin(), t.edge_set.end(), e);
}

template <typename EdgeRange>
bool is_spanning_tree(const Graph& g, const EdgeRange& edge_set) {
    int count = 0;
    UnionFind uf(g.vertex_count);
    for (const int e : edge_set) {
        if (e < 0 || e >= g.edge_count()) throw InputError("tree edge index out of range");
        ++count;
        if (!uf.unite(g.edges[e].first, g.edges[e].second)) return false;  // cycle
    }
    return count == g.vertex_count - 1;  // acyclic with V-1 edges spans
}

inline bool is_spanning_tree(const Graph& g, const SpanningTree& t) {
    return is_spanning_tree(g, t.edge_set);
}

// membership mask, handy for repeated queries
inline std::vector<char> tree_mask(const Graph& g, const SpanningTree& t) {
    std::vector<char> mask(g.edge_count(), 0);
    for (const int e : t.edge_set) mask[e] = 1;
    return mask;
}

}  // namespace fairpeano
