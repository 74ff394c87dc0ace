#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fairpeano/graph.hpp"

namespace fairpeano {

using EdgeWeights = std::vector<double>;

inline void check_weights(const Graph& g, const EdgeWeights& w) {
    if ((int)w.size() != g.edge_count())
        throw InputError("weight vector length does not match edge count");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(w[i] > 0.0))
            throw InputError("weight at edge " + std::to_string(i) + " must be positive");
}

inline EdgeWeights unit_weights(const Graph& g) { return EdgeWeights(g.edge_count(), 1.0); }

// Weighted Laplacian with the last vertex grounded. Parallel edges sum their
// conductances, which is exactly what the electrical network does.
inline Eigen::MatrixXd reduced_laplacian(const Graph& g, const EdgeWeights& w) {
    const int n = g.vertex_count - 1;
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edges[e];
        if (a < n) L(a, a) += w[e];
        if (b < n) L(b, b) += w[e];
        if (a < n && b < n) {
            L(a, b) -= w[e];
            L(b, a) -= w[e];
        }
    }
    return L;
}

// Sum over spanning trees of the product of edge weights, as a determinant.
// With unit weights this is the spanning tree count.
inline double matrix_tree_count(const Graph& g, const EdgeWeights& w) {
    check_weights(g, w);
    if (!is_connected(g)) return 0.0;
    if (g.vertex_count == 1) return 1.0;
    return reduced_laplacian(g, w).partialPivLu().determinant();
}

inline double matrix_tree_count(const Graph& g) { return matrix_tree_count(g, unit_weights(g)); }

class ResistanceSolver {
  public:
    ResistanceSolver(const Graph& g, const EdgeWeights& w) : g_(g) {
        check_weights(g, w);
        if (!is_connected(g)) throw InputError("effective resistance needs a connected graph");
        if (g.vertex_count >= 2) solver_.compute(reduced_laplacian(g, w));
    }

    // two-point resistance between the endpoints of edge e
    double between(int a, int b) const {
        const int n = g_.vertex_count - 1;
        if (n == 0) return 0.0;
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
        if (a < n) rhs(a) += 1.0;
        if (b < n) rhs(b) -= 1.0;
        const Eigen::VectorXd x = solver_.solve(rhs);
        double r = 0.0;
        if (a < n) r += x(a);
        if (b < n) r -= x(b);
        return r;
    }

    double edge(int e) const { return between(g_.edges[e].first, g_.edges[e].second); }

  private:
    const Graph& g_;
    Eigen::LDLT<Eigen::MatrixXd> solver_;
};

inline double effective_resistance(const Graph& g, const EdgeWeights& w, int e) {
    if (e < 0 || e >= g.edge_count()) throw InputError("effective_resistance edge out of range");
    return ResistanceSolver(g, w).edge(e);
}

// P(e in tree) = w(e) * effR(e), reported per edge index: parallel edges
// share a resistance but each contributes its own conductance share.
inline std::vector<double> kirchhoff_edge_probabilities(const Graph& g, const EdgeWeights& w) {
    ResistanceSolver solver(g, w);
    std::vector<double> p(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) p[e] = w[e] * solver.edge(e);
    return p;
}

}  // namespace fairpeano
