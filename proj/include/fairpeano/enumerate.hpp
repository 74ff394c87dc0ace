#pragma once

#include <string>
#include <vector>

#include "fairpeano/spanning_tree.hpp"

namespace fairpeano {

namespace detail {

struct TreeEnumerator {
    const Graph& g;
    long long cap;
    std::vector<SpanningTree> out;
    std::vector<int> chosen;

    // branch on each edge in index order: include first, then exclude.
    // skip edges whose endpoints are already joined (they would close a
    // cycle); prune the exclude branch when the remaining edges cannot
    // reconnect what is left.
    void rec(int next_edge, UnionFind uf, int needed) {
        if (needed == 0) {
            if ((long long)out.size() >= cap)
                throw InputError("spanning tree count exceeds cap " + std::to_string(cap));
            out.push_back(make_tree(chosen));
            return;
        }
        if (next_edge >= g.edge_count()) return;
        // feasibility: can the remaining edges still connect all components?
        {
            UnionFind probe = uf;
            int merges = 0;
            for (int e = next_edge; e < g.edge_count() && merges < needed; ++e)
                if (probe.unite(g.edges[e].first, g.edges[e].second)) ++merges;
            if (merges < needed) return;
        }
        const auto& [a, b] = g.edges[next_edge];
        if (uf.find(a) == uf.find(b)) {
            rec(next_edge + 1, std::move(uf), needed);
            return;
        }
        {
            UnionFind with = uf;
            with.unite(a, b);
            chosen.push_back(next_edge);
            rec(next_edge + 1, std::move(with), needed - 1);
            chosen.pop_back();
        }
        rec(next_edge + 1, std::move(uf), needed);
    }
};

}  // namespace detail

// All spanning trees, each once, in a deterministic order. The cap guards
// against exponential blowup on inputs this brute-force oracle was never
// meant for.
inline std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g,
                                                          long long cap = 1000000) {
    if (!is_connected(g)) throw InputError("enumerate_spanning_trees needs a connected graph");
    detail::TreeEnumerator en{g, cap, {}, {}};
    en.rec(0, UnionFind(g.vertex_count), g.vertex_count - 1);
    return std::move(en.out);
}

}  // namespace fairpeano
