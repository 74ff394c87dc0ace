#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "fairpeano/density.hpp"
#include "fairpeano/kirchhoff.hpp"

namespace fairpeano {

struct UniformizeResult {
    std::vector<double> weights;  // geometric mean 1
    double residual = 0.0;        // max |p_e - (|V|-1)/|E|| at the returned weights
    long long iterations = 0;
};

// Reweight edges so every edge is equally likely in the weighted spanning
// tree measure. Feasible exactly on biconnected strictly 1-dense graphs: a
// cut edge sits in every tree regardless of weights, and a too-dense piece
// hogs probability no matter how its edges are discounted. The iteration is
// a damped fixed point in log-weight space; the target probability is pinned
// by the handshake count, not by anything the iteration could drift toward.
inline UniformizeResult uniformize(const Graph& g, const EdgeWeights& initial,
                                   double tol = 1e-10, long long max_iter = 100000,
                                   int scan_bound = 16) {
    if (!is_biconnected(g)) throw InputError("uniformize needs a biconnected graph");
    if (!is_strictly_1_dense(g, scan_bound))
        throw InputError("uniformize needs a strictly 1-dense graph");
    check_weights(g, initial);
    const int E = g.edge_count();
    const double target = double(g.vertex_count - 1) / double(E);
    const double damping = 0.5;

    std::vector<double> u(E);
    for (int e = 0; e < E; ++e) u[e] = std::log(initial[e]);

    UniformizeResult res;
    EdgeWeights w(E);
    for (long long k = 0; k <= max_iter; ++k) {
        double mean_u = std::accumulate(u.begin(), u.end(), 0.0) / double(E);
        for (int e = 0; e < E; ++e) w[e] = std::exp(u[e] - mean_u);
        const std::vector<double> p = kirchhoff_edge_probabilities(g, w);
        double residual = 0.0;
        for (int e = 0; e < E; ++e) residual = std::max(residual, std::abs(p[e] - target));
        res.iterations = k;
        res.residual = residual;
        if (residual <= tol) {
            res.weights = w;
            return res;
        }
        for (int e = 0; e < E; ++e) u[e] -= damping * (std::log(p[e]) - std::log(target));
    }
    throw NonConvergenceError(
        "uniformize residual " + std::to_string(res.residual) + " after " +
            std::to_string(max_iter) + " iterations",
        res.residual);
}

inline UniformizeResult uniformize(const Graph& g, double tol = 1e-10,
                                   long long max_iter = 100000, int scan_bound = 16) {
    return uniformize(g, unit_weights(g), tol, max_iter, scan_bound);
}

}  // namespace fairpeano
