#pragma once

#include "fairpeano/density.hpp"
#include "fairpeano/feu.hpp"

namespace fairpeano {

struct Classification {
    Density density;
    DensestScan scan;
    bool strictly_1_dense = false;
    bool homogeneous = false;
    FeuSolution feu;
};

// Combinatorial and variational views side by side: the subgraph scan decides
// strict 1-density, the projection decides whether the optimal edge vector is
// constant. On every graph we test these agree; the struct keeps both so a
// disagreement would be visible rather than masked.
inline Classification classify_graph(const Graph& g, int scan_bound = 16) {
    Classification c;
    c.density = one_density(g);
    c.scan = densest_subgraphs(g, scan_bound);
    c.strictly_1_dense = is_strictly_1_dense(g, scan_bound);
    c.feu = solve_feu_exact(g);
    c.homogeneous = c.feu.homogeneous;
    return c;
}

inline Classification classify_graph(const Graph& g, FeuSolution feu, int scan_bound = 16) {
    Classification c;
    c.density = one_density(g);
    c.scan = densest_subgraphs(g, scan_bound);
    c.strictly_1_dense = is_strictly_1_dense(g, scan_bound);
    c.feu = std::move(feu);
    c.homogeneous = c.feu.homogeneous;
    return c;
}

}  // namespace fairpeano
