#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "fairpeano/graph.hpp"
#include "fairpeano/rational.hpp"

namespace fairpeano {

// theta = |E| / (|V| - 1), kept exact
struct Density {
    long long edge_count = 0;
    long long denominator = 1;
    Rational theta;
};

inline Density one_density(const Graph& g) {
    if (g.vertex_count < 2) throw InputError("one_density needs at least two vertices");
    Density d;
    d.edge_count = g.edge_count();
    d.denominator = g.vertex_count - 1;
    d.theta = Rational(d.edge_count, d.denominator);
    return d;
}

// Exhaustive scan over connected vertex-induced subgraphs with at least one
// edge. Subsets are bitmasks over the vertices, so the brute-force bound of
// 16 vertices keeps this at 65536 candidates.
struct DensestScan {
    Rational theta_max;
    std::vector<std::uint32_t> maximizer_masks;
    std::vector<std::uint32_t> minimal_masks;  // maximizers with no proper maximizing subgraph
};

inline std::vector<int> mask_vertices(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

namespace detail {

inline bool mask_connected(std::uint32_t mask, const std::vector<std::uint32_t>& adj_mask) {
    const std::uint32_t start = mask & (~mask + 1);  // lowest set bit
    std::uint32_t reach = start;
    for (;;) {
        std::uint32_t next = reach;
        std::uint32_t scan = reach;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            next |= adj_mask[v] & mask;
        }
        if (next == reach) break;
        reach = next;
    }
    return reach == mask;
}

}  // namespace detail

inline DensestScan densest_subgraphs(const Graph& g, int bound = 16) {
    if (!is_connected(g)) throw InputError("densest_subgraphs needs a connected graph");
    if (g.vertex_count > std::min(bound, 24))
        throw InputError("densest_subgraphs brute-force bound of " + std::to_string(bound) +
                         " vertices exceeded; use the variance solver for larger graphs");
    std::vector<std::uint32_t> adj_mask(g.vertex_count, 0);
    for (const auto& [a, b] : g.edges) {
        adj_mask[a] |= 1u << b;
        adj_mask[b] |= 1u << a;
    }
    DensestScan scan;
    scan.theta_max = Rational(0, 1);
    const std::uint32_t full = (1u << g.vertex_count) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int nv = std::popcount(mask);
        if (nv < 2) continue;
        long long ne = 0;
        for (const auto& [a, b] : g.edges)
            if ((mask >> a & 1) && (mask >> b & 1)) ++ne;
        if (ne == 0) continue;
        if (!detail::mask_connected(mask, adj_mask)) continue;
        const Rational theta(ne, nv - 1);
        if (theta > scan.theta_max) {
            scan.theta_max = theta;
            scan.maximizer_masks.clear();
        }
        if (theta == scan.theta_max) scan.maximizer_masks.push_back(mask);
    }
    for (const std::uint32_t m : scan.maximizer_masks) {
        bool minimal = true;
        for (const std::uint32_t other : scan.maximizer_masks)
            if (other != m && (other & m) == other) {
                minimal = false;
                break;
            }
        if (minimal) scan.minimal_masks.push_back(m);
    }
    return scan;
}

// Every proper connected induced subgraph with an edge is strictly less
// dense. Equivalent to: the whole graph is the unique density maximizer.
// Two-vertex graphs have no proper candidates at all, so they qualify
// vacuously (a digon classifies as strictly 1-dense; deflation handles its
// own stop rule separately).
inline bool is_strictly_1_dense(const Graph& g, int bound = 16) {
    if (g.vertex_count < 2) throw InputError("strict 1-density needs at least two vertices");
    const DensestScan scan = densest_subgraphs(g, bound);
    const std::uint32_t full = (1u << g.vertex_count) - 1;
    return scan.maximizer_masks.size() == 1 && scan.maximizer_masks[0] == full;
}

}  // namespace fairpeano
