#pragma once

#include <algorithm>
#include <vector>

#include "fairpeano/kirchhoff.hpp"
#include "fairpeano/rng.hpp"
#include "fairpeano/spanning_tree.hpp"

namespace fairpeano {

enum class WustAlgorithm { wilson, aldous_broder };

namespace detail {

// per-vertex cumulative conductances for weighted random-walk steps
struct WalkTables {
    const Graph& g;
    std::vector<std::vector<double>> cum;

    WalkTables(const Graph& g_, const EdgeWeights& w) : g(g_), cum(g_.vertex_count) {
        for (int v = 0; v < g.vertex_count; ++v) {
            double total = 0.0;
            cum[v].reserve(g.adj[v].size());
            for (const auto& [to, e] : g.adj[v]) cum[v].push_back(total += w[e]);
        }
    }

    // returns adjacency slot of the step taken from v
    int step(int v, RandomStream& rng) const {
        const double x = rng.unit() * cum[v].back();
        const auto it = std::upper_bound(cum[v].begin(), cum[v].end(), x);
        return std::min<int>((int)(it - cum[v].begin()), (int)cum[v].size() - 1);
    }
};

}  // namespace detail

// Random spanning tree with mass proportional to the product of edge
// weights. Wilson: loop-erased walks recorded as a last-exit table, so loops
// pop for free when a branch is retraced. Aldous-Broder: first-entry edges
// of a single covering walk. Both are exact samplers of the same law.
inline SpanningTree sample_wust(const Graph& g, const EdgeWeights& w, RandomStream& rng,
                                WustAlgorithm algorithm, int root = 0) {
    check_weights(g, w);
    if (!is_connected(g)) throw InputError("sample_wust needs a connected graph");
    if (root < 0 || root >= g.vertex_count) throw InputError("sample_wust root out of range");
    const detail::WalkTables tables(g, w);
    std::vector<int> tree_edges;
    tree_edges.reserve(g.vertex_count - 1);

    if (algorithm == WustAlgorithm::wilson) {
        std::vector<char> in_tree(g.vertex_count, 0);
        std::vector<int> exit_edge(g.vertex_count, -1);
        std::vector<int> exit_to(g.vertex_count, -1);
        in_tree[root] = 1;
        for (int start = 0; start < g.vertex_count; ++start) {
            if (in_tree[start]) continue;
            int v = start;
            while (!in_tree[v]) {
                const int slot = tables.step(v, rng);
                exit_to[v] = g.adj[v][slot].first;
                exit_edge[v] = g.adj[v][slot].second;
                v = exit_to[v];
            }
            v = start;
            while (!in_tree[v]) {
                in_tree[v] = 1;
                tree_edges.push_back(exit_edge[v]);
                v = exit_to[v];
            }
        }
    } else {
        std::vector<char> seen(g.vertex_count, 0);
        int remaining = g.vertex_count - 1;
        int v = root;
        seen[root] = 1;
        while (remaining > 0) {
            const int slot = tables.step(v, rng);
            const auto [to, e] = tables.g.adj[v][slot];
            if (!seen[to]) {
                seen[to] = 1;
                tree_edges.push_back(e);
                --remaining;
            }
            v = to;
        }
    }
    return make_tree(std::move(tree_edges));
}

}  // namespace fairpeano
