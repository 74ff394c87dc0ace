#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "fairpeano/kirchhoff.hpp"
#include "fairpeano/tree_pmf.hpp"

namespace fairpeano {

// Optimum of: minimize Var(eta) over edge-probability vectors eta realizable
// by some pmf on spanning trees. Since every tree uses |V|-1 edges the mean
// of eta is pinned at (|V|-1)/|E|, so this is the Euclidean projection of
// the constant vector onto the spanning tree polytope. eta is unique, the
// witness pmf is not.
struct FeuSolution {
    std::vector<double> eta;
    double variance = 0.0;
    TreePmf witness;
    bool homogeneous = false;
    bool converged = true;
    long long iterations = 0;
    double gap = 0.0;  // final duality gap of the conditional-gradient view
};

inline double variance_of(const std::vector<double>& eta) {
    if (eta.empty()) return 0.0;
    double mean = 0.0;
    for (const double x : eta) mean += x;
    mean /= double(eta.size());
    double var = 0.0;
    for (const double x : eta) var += (x - mean) * (x - mean);
    return var / double(eta.size());
}

// Kruskal with ties broken by edge index: the deterministic linear
// minimization oracle over tree indicator vectors.
inline SpanningTree min_weight_spanning_tree(const Graph& g, const std::vector<double>& weight) {
    std::vector<int> order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight[a] < weight[b]; });
    UnionFind uf(g.vertex_count);
    std::vector<int> chosen;
    chosen.reserve(g.vertex_count - 1);
    for (const int e : order)
        if (uf.unite(g.edges[e].first, g.edges[e].second)) {
            chosen.push_back(e);
            if ((int)chosen.size() == g.vertex_count - 1) break;
        }
    if ((int)chosen.size() != g.vertex_count - 1)
        throw InputError("minimum spanning tree oracle needs a connected graph");
    return make_tree(std::move(chosen));
}

namespace detail {

inline void finish_solution(const Graph& g, FeuSolution& sol, double homog_tol = 1e-8) {
    sol.variance = variance_of(sol.eta);
    const auto [lo, hi] = std::minmax_element(sol.eta.begin(), sol.eta.end());
    sol.homogeneous = (*hi - *lo) <= homog_tol;
    // drop numerically dead support and renormalize
    TreePmf cleaned;
    double total = 0.0;
    for (std::size_t i = 0; i < sol.witness.trees.size(); ++i)
        if (sol.witness.mass[i] > 1e-15) {
            cleaned.trees.push_back(sol.witness.trees[i]);
            cleaned.mass.push_back(sol.witness.mass[i]);
            total += sol.witness.mass[i];
        }
    for (double& m : cleaned.mass) m /= total;
    sol.witness = std::move(cleaned);
}

}  // namespace detail

// Conditional gradient with exact line search on the quadratic objective.
// Gradient weights are 2(eta - mean); each step moves toward the minimum
// spanning tree under those weights. Terminates when the duality gap drops
// below tol; if max_iter runs out first, the result is returned honestly
// flagged instead of thrown. Away steps exist as an opt-in fallback and stay
// off by default.
inline FeuSolution solve_feu_frank_wolfe(const Graph& g, double tol = 1e-8,
                                         long long max_iter = 200000,
                                         bool away_steps = false) {
    if (!is_connected(g)) throw InputError("variance minimization needs a connected graph");
    const int E = g.edge_count();
    const double mean = double(g.vertex_count - 1) / double(E);

    std::map<std::vector<int>, std::size_t> index_of;
    FeuSolution sol;
    {
        SpanningTree t0 = min_weight_spanning_tree(g, std::vector<double>(E, 0.0));
        sol.eta.assign(E, 0.0);
        for (const int e : t0.edge_set) sol.eta[e] = 1.0;
        index_of[t0.edge_set] = 0;
        sol.witness.trees.push_back(std::move(t0));
        sol.witness.mass.push_back(1.0);
    }

    std::vector<double> grad(E);
    sol.converged = false;
    for (long long k = 0; k < max_iter; ++k) {
        for (int e = 0; e < E; ++e) grad[e] = 2.0 * (sol.eta[e] - mean);
        const SpanningTree s = min_weight_spanning_tree(g, grad);

        double gap = 0.0;
        for (int e = 0; e < E; ++e) gap += grad[e] * sol.eta[e];
        for (const int e : s.edge_set) gap -= grad[e];
        gap /= double(E);  // objective is Var = ||eta - mean||^2 / E
        sol.iterations = k;
        sol.gap = gap;
        if (gap <= tol) {
            sol.converged = true;
            break;
        }

        // direction d = s - eta; away direction competes only when enabled
        double step_to = 0.0, dd = 0.0;
        {
            std::vector<char> in_s(E, 0);
            for (const int e : s.edge_set) in_s[e] = 1;
            for (int e = 0; e < E; ++e) {
                const double d = double(in_s[e]) - sol.eta[e];
                step_to += (sol.eta[e] - mean) * d;
                dd += d * d;
            }
        }
        bool used_away = false;
        std::size_t away_idx = 0;
        if (away_steps && sol.witness.trees.size() > 1) {
            double worst = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < sol.witness.trees.size(); ++i) {
                if (sol.witness.mass[i] <= 0.0) continue;
                double val = 0.0;
                for (const int e : sol.witness.trees[i].edge_set) val += grad[e];
                if (val > worst) {
                    worst = val;
                    away_idx = i;
                }
            }
            double fw_val = 0.0;
            for (const int e : s.edge_set) fw_val += grad[e];
            double eta_val = 0.0;
            for (int e = 0; e < E; ++e) eta_val += grad[e] * sol.eta[e];
            used_away = (worst - eta_val) > (eta_val - fw_val);
        }

        if (!used_away) {
            if (dd <= 0.0) {
                sol.converged = true;
                break;
            }
            const double tau = std::clamp(-step_to / dd, 0.0, 1.0);
            std::vector<char> in_s(E, 0);
            for (const int e : s.edge_set) in_s[e] = 1;
            for (int e = 0; e < E; ++e)
                sol.eta[e] = (1.0 - tau) * sol.eta[e] + tau * double(in_s[e]);
            for (double& m : sol.witness.mass) m *= (1.0 - tau);
            const auto it = index_of.find(s.edge_set);
            if (it != index_of.end()) {
                sol.witness.mass[it->second] += tau;
            } else {
                index_of[s.edge_set] = sol.witness.trees.size();
                sol.witness.trees.push_back(s);
                sol.witness.mass.push_back(tau);
            }
        } else {
            // move away from the worst active tree
            const SpanningTree& a = sol.witness.trees[away_idx];
            const double alpha = sol.witness.mass[away_idx];
            std::vector<double> d(E, 0.0);
            for (int e = 0; e < E; ++e) d[e] = sol.eta[e];
            for (const int e : a.edge_set) d[e] -= 1.0;
            double num = 0.0, den = 0.0;
            for (int e = 0; e < E; ++e) {
                num += (sol.eta[e] - mean) * d[e];
                den += d[e] * d[e];
            }
            if (den <= 0.0) continue;
            const double tau_max = alpha / (1.0 - alpha);
            const double tau = std::clamp(-num / den, 0.0, tau_max);
            for (int e = 0; e < E; ++e) sol.eta[e] += tau * d[e];
            for (double& m : sol.witness.mass) m *= (1.0 + tau);
            sol.witness.mass[away_idx] -= tau;
        }
    }
    if (!sol.converged) sol.iterations = max_iter;
    detail::finish_solution(g, sol);
    return sol;
}

// Exact solver: Wolfe's minimum-norm-point algorithm over the spanning tree
// polytope, with the same Kruskal oracle. Affine subproblems solve the
// bordered Gram system over the active corral; the iteration terminates at
// the exact projection, so small graphs come out at machine precision. The
// matrix-tree count gates inputs the same way the enumeration oracle would.
inline FeuSolution solve_feu_exact(const Graph& g, double tol = 1e-10,
                                   long long tree_cap = 1000000) {
    if (!is_connected(g)) throw InputError("variance minimization needs a connected graph");
    if (matrix_tree_count(g) > double(tree_cap))
        throw InputError("spanning tree count exceeds cap " + std::to_string(tree_cap));
    const int E = g.edge_count();
    const double mean = double(g.vertex_count - 1) / double(E);

    std::vector<SpanningTree> corral;
    std::vector<double> lambda;
    std::map<std::vector<int>, bool> seen;
    std::vector<double> x(E, 0.0);
    {
        SpanningTree t0 = min_weight_spanning_tree(g, std::vector<double>(E, 0.0));
        for (const int e : t0.edge_set) x[e] = 1.0;
        seen[t0.edge_set] = true;
        corral.push_back(std::move(t0));
        lambda.push_back(1.0);
    }

    auto affine_minimizer = [&](Eigen::VectorXd& beta) {
        // minimize ||sum beta_i s_i - mean||^2 subject to sum beta = 1
        const int k = (int)corral.size();
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(k + 1, k + 1);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
        for (int i = 0; i < k; ++i) {
            for (int j = i; j < k; ++j) {
                // Gram entry = size of edge-set intersection
                double dot = 0.0;
                const auto& A = corral[i].edge_set;
                const auto& B = corral[j].edge_set;
                std::size_t p = 0, q = 0;
                while (p < A.size() && q < B.size()) {
                    if (A[p] == B[q]) ++dot, ++p, ++q;
                    else if (A[p] < B[q]) ++p;
                    else ++q;
                }
                M(i, j) = M(j, i) = dot + (i == j ? 1e-13 : 0.0);
            }
            rhs(i) = mean * double(corral[i].edge_set.size());  // <s_i, mean * 1>
            M(i, k) = M(k, i) = 1.0;
        }
        rhs(k) = 1.0;
        const Eigen::VectorXd full = M.ldlt().solve(rhs);
        beta = full.head(k);
    };

    FeuSolution sol;
    sol.converged = false;
    const long long iter_cap = 1000 + 50LL * E;
    long long k = 0;
    for (; k < iter_cap; ++k) {
        std::vector<double> w(E);
        for (int e = 0; e < E; ++e) w[e] = x[e] - mean;
        SpanningTree s = min_weight_spanning_tree(g, w);
        double wx = 0.0, ws = 0.0, norm2 = 0.0;
        for (int e = 0; e < E; ++e) {
            wx += w[e] * x[e];
            norm2 += w[e] * w[e];
        }
        for (const int e : s.edge_set) ws += w[e];
        sol.gap = 2.0 * (wx - ws) / double(E);
        if (wx - ws <= tol * std::max(1.0, norm2) || seen.count(s.edge_set)) {
            sol.converged = true;
            break;
        }
        seen[s.edge_set] = true;
        corral.push_back(std::move(s));
        lambda.push_back(0.0);

        for (;;) {
            Eigen::VectorXd beta;
            affine_minimizer(beta);
            bool interior = true;
            for (int i = 0; i < beta.size(); ++i)
                if (beta(i) < 1e-12) {
                    interior = false;
                    break;
                }
            if (interior) {
                for (std::size_t i = 0; i < corral.size(); ++i) lambda[i] = beta(i);
                break;
            }
            // step from lambda toward beta until the first coordinate dies
            double theta = 1.0;
            for (std::size_t i = 0; i < corral.size(); ++i)
                if (beta(i) < 1e-12 && lambda[i] - beta(i) > 1e-15)
                    theta = std::min(theta, lambda[i] / (lambda[i] - beta(i)));
            std::vector<SpanningTree> keep_trees;
            std::vector<double> keep_lambda;
            for (std::size_t i = 0; i < corral.size(); ++i) {
                const double v = lambda[i] + theta * (beta(i) - lambda[i]);
                if (v > 1e-12) {
                    keep_trees.push_back(std::move(corral[i]));
                    keep_lambda.push_back(v);
                }
            }
            corral = std::move(keep_trees);
            lambda = std::move(keep_lambda);
            double total = 0.0;
            for (const double v : lambda) total += v;
            for (double& v : lambda) v /= total;
        }
        x.assign(E, 0.0);
        for (std::size_t i = 0; i < corral.size(); ++i)
            for (const int e : corral[i].edge_set) x[e] += lambda[i];
    }
    sol.iterations = k;
    sol.eta = std::move(x);
    sol.witness.trees = std::move(corral);
    sol.witness.mass = std::move(lambda);
    detail::finish_solution(g, sol);
    return sol;
}

}  // namespace fairpeano
