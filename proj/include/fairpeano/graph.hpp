#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fairpeano/errors.hpp"

namespace fairpeano {

// Finite multigraph without self-loops. Edges are addressed by their index
// in the original insertion order and are never reordered; parallel edges
// are distinct. Immutable after construction.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    // adj[v] = (neighbor, edge index), built once at construction
    std::vector<std::vector<std::pair<int, int>>> adj;

    int edge_count() const { return (int)edges.size(); }

    int other_end(int edge, int v) const {
        const auto& [a, b] = edges[edge];
        return a == v ? b : a;
    }
};

inline Graph build_graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) {
    if (vertex_count <= 0) throw InputError("graph needs at least one vertex");
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        const auto& [a, b] = edge_list[i];
        if (a == b)
            throw InputError("self-loop at edge index " + std::to_string(i));
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw InputError("edge index " + std::to_string(i) + " has endpoint out of range");
    }
    Graph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(edge_list);
    g.adj.resize(vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edges[e];
        g.adj[a].push_back({b, e});
        g.adj[b].push_back({a, e});
    }
    return g;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

inline bool is_connected(const Graph& g) {
    if (g.vertex_count == 1) return true;
    UnionFind uf(g.vertex_count);
    int parts = g.vertex_count;
    for (const auto& [a, b] : g.edges)
        if (uf.unite(a, b) && --parts == 1) return true;
    return parts == 1;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new vertex -> original vertex
    std::vector<int> edge_map;    // new edge -> original edge
};

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) throw InputError("induced_subgraph needs a nonempty vertex set");
    std::vector<int> to_new(g.vertex_count, -1);
    InducedSubgraph out;
    for (const int v : vertices) {
        if (v < 0 || v >= g.vertex_count)
            throw InputError("induced_subgraph vertex " + std::to_string(v) + " out of range");
        if (to_new[v] != -1) continue;
        to_new[v] = (int)out.vertex_map.size();
        out.vertex_map.push_back(v);
    }
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edges[e];
        if (to_new[a] != -1 && to_new[b] != -1) {
            kept.push_back({to_new[a], to_new[b]});
            out.edge_map.push_back(e);
        }
    }
    out.graph = build_graph((int)out.vertex_map.size(), std::move(kept));
    return out;
}

struct Contraction {
    Graph graph;
    std::vector<int> vertex_map;  // original vertex -> new vertex
    std::vector<int> edge_map;    // new edge -> original edge
};

// Merge everything touched by core_edges into one vertex. Self-loops created
// by the contraction disappear; parallel edges survive. The merged vertex
// takes the relabeling slot of its smallest original member, so repeated
// contractions stay deterministic.
inline Contraction contract_subgraph(const Graph& g, const std::vector<int>& core_edges) {
    if (core_edges.empty()) throw InputError("contract_subgraph needs a nonempty edge set");
    UnionFind uf(g.vertex_count);
    std::vector<char> in_core(g.vertex_count, 0);
    for (const int e : core_edges) {
        if (e < 0 || e >= g.edge_count())
            throw InputError("contract_subgraph edge " + std::to_string(e) + " out of range");
        const auto& [a, b] = g.edges[e];
        in_core[a] = in_core[b] = 1;
        uf.unite(a, b);
    }
    int core_root = -1;
    for (int v = 0; v < g.vertex_count; ++v)
        if (in_core[v]) {
            if (core_root == -1) core_root = uf.find(v);
            else if (uf.find(v) != core_root)
                throw InputError("contract_subgraph core edges do not induce a connected subgraph");
        }

    Contraction out;
    out.vertex_map.assign(g.vertex_count, -1);
    int next = 0;
    int core_new = -1;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (!in_core[v]) {
            out.vertex_map[v] = next++;
        } else if (core_new == -1) {
            core_new = next++;
            out.vertex_map[v] = core_new;
        } else {
            out.vertex_map[v] = core_new;
        }
    }
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < g.edge_count(); ++e) {
        const int a = out.vertex_map[g.edges[e].first];
        const int b = out.vertex_map[g.edges[e].second];
        if (a == b) continue;
        kept.push_back({a, b});
        out.edge_map.push_back(e);
    }
    out.graph = build_graph(next, std::move(kept));
    return out;
}

// True when the graph stays connected after removing any single vertex.
// Parallel edges count, so a doubled edge on two vertices passes.
inline bool is_biconnected(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.vertex_count <= 2) return g.edge_count() >= 1;
    std::vector<int> depth(g.vertex_count, -1), low(g.vertex_count, 0);
    std::vector<int> parent_edge(g.vertex_count, -1);
    // iterative DFS from vertex 0; track per-vertex adjacency cursor
    std::vector<std::size_t> cursor(g.vertex_count, 0);
    std::vector<int> stack = {0};
    depth[0] = 0;
    low[0] = 0;
    int root_children = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        if (cursor[v] < g.adj[v].size()) {
            const auto [w, e] = g.adj[v][cursor[v]++];
            if (e == parent_edge[v]) continue;
            if (depth[w] == -1) {
                depth[w] = depth[v] + 1;
                low[w] = depth[w];
                parent_edge[w] = e;
                if (v == 0) ++root_children;
                stack.push_back(w);
            } else {
                low[v] = std::min(low[v], depth[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                const int p = stack.back();
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= depth[p]) return false;  // p is an articulation vertex
            }
        }
    }
    return root_children <= 1;
}

}  // namespace fairpeano
