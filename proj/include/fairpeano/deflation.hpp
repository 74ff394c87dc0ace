#pragma once

#include <algorithm>
#include <vector>

#include "fairpeano/density.hpp"
#include "fairpeano/graph.hpp"

namespace fairpeano {

// One contraction step: the chosen core (vertices in the pre-contraction
// graph), its exact density, and the quotient graph with its relabeling maps.
struct DeflationStage {
    std::vector<int> core_vertices;
    Density core_density;
    Contraction quotient;
};

struct DeflationSequence {
    Graph initial;
    std::vector<DeflationStage> stages;
    Graph terminal;  // the graph the process stops at
    bool completed = false;  // reached a single vertex
};

// Deflation repeatedly contracts a densest proper piece. Among the minimal
// maximizers of theta we take the one with lexicographically smallest sorted
// vertex list, so the whole sequence is reproducible. Two-vertex graphs stop
// the process only when a single edge remains: a two-vertex multigraph still
// has a digon to collapse, and collapsing it is what lets a modified grid
// deflate in exactly m*n stages.
inline DeflationSequence deflate(const Graph& g, int scan_bound = 16, int max_stages = 10000) {
    DeflationSequence seq;
    seq.initial = g;
    Graph cur = g;
    for (int stage = 0; stage < max_stages; ++stage) {
        if (cur.vertex_count == 1) {
            seq.completed = true;
            break;
        }
        if (cur.vertex_count == 2 && cur.edge_count() == 1) break;
        DensestScan scan = densest_subgraphs(cur, scan_bound);
        // lexicographically smallest minimal core, comparing sorted vertex
        // lists (mask order is not the same thing once vertices pass bit 0)
        std::vector<int> best;
        for (const unsigned mask : scan.minimal_masks) {
            std::vector<int> verts = mask_vertices(mask);
            if (best.empty() || verts < best) best = std::move(verts);
        }
        DeflationStage st;
        st.core_vertices = best;
        st.core_density = one_density(induced_subgraph(cur, best).graph);
        std::vector<char> in_core(cur.vertex_count, 0);
        for (const int v : best) in_core[v] = 1;
        std::vector<int> core_edges;
        for (int e = 0; e < cur.edge_count(); ++e)
            if (in_core[cur.edges[e].first] && in_core[cur.edges[e].second])
                core_edges.push_back(e);
        st.quotient = contract_subgraph(cur, core_edges);
        cur = st.quotient.graph;
        seq.stages.push_back(std::move(st));
    }
    seq.terminal = cur;
    if (!seq.completed && !(cur.vertex_count == 2 && cur.edge_count() == 1) &&
        cur.vertex_count != 1)
        throw NonConvergenceError("deflation did not terminate within " +
                                      std::to_string(max_stages) + " stages",
                                  double(cur.vertex_count));
    return seq;
}

}  // namespace fairpeano
