#pragma once

#include <cmath>
#include <vector>

#include "fairpeano/enumerate.hpp"
#include "fairpeano/kirchhoff.hpp"

namespace fairpeano {

// Explicit distribution over an enumerated tree list.
struct TreePmf {
    std::vector<SpanningTree> trees;
    std::vector<double> mass;
};

inline void validate_pmf(const TreePmf& pmf, double tol = 1e-12) {
    if (pmf.trees.size() != pmf.mass.size())
        throw InputError("tree pmf has mismatched tree and mass counts");
    double total = 0.0;
    for (const double m : pmf.mass) {
        if (m < 0.0) throw InputError("tree pmf has a negative mass");
        total += m;
    }
    if (std::abs(total - 1.0) > tol) throw InputError("tree pmf masses do not sum to 1");
}

// eta(e) = P(e in tree) under the pmf
inline std::vector<double> pmf_edge_probabilities(const Graph& g, const TreePmf& pmf) {
    std::vector<double> eta(g.edge_count(), 0.0);
    for (std::size_t t = 0; t < pmf.trees.size(); ++t)
        for (const int e : pmf.trees[t].edge_set) eta[e] += pmf.mass[t];
    return eta;
}

// Enumeration-backed reference pmf: each tree weighted by the product of its
// edge weights. This is the oracle the samplers and the linear-algebra route
// are tested against.
inline TreePmf weighted_enumeration_pmf(const Graph& g, const EdgeWeights& w,
                                        long long cap = 1000000) {
    check_weights(g, w);
    TreePmf pmf;
    pmf.trees = enumerate_spanning_trees(g, cap);
    pmf.mass.resize(pmf.trees.size());
    double total = 0.0;
    for (std::size_t t = 0; t < pmf.trees.size(); ++t) {
        double prod = 1.0;
        for (const int e : pmf.trees[t].edge_set) prod *= w[e];
        pmf.mass[t] = prod;
        total += prod;
    }
    for (double& m : pmf.mass) m /= total;
    return pmf;
}

inline TreePmf uniform_pmf(std::vector<SpanningTree> trees) {
    TreePmf pmf;
    pmf.mass.assign(trees.size(), 1.0 / double(trees.size()));
    pmf.trees = std::move(trees);
    return pmf;
}

}  // namespace fairpeano
