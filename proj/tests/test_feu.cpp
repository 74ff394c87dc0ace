#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "fairpeano/classify.hpp"
#include "fairpeano/deflation.hpp"
#include "fairpeano/feu.hpp"
#include "fairpeano/uniformize.hpp"
#include "support.hpp"

using namespace fairpeano;

namespace {

void check_solution_consistency(const Graph& g, const FeuSolution& sol, double tol) {
    REQUIRE(sol.eta.size() == (std::size_t)g.edge_count());
    validate_pmf(sol.witness, 1e-9);
    for (const auto& t : sol.witness.trees) CHECK(is_spanning_tree(g, t));
    const auto from_witness = pmf_edge_probabilities(g, sol.witness);
    for (int e = 0; e < g.edge_count(); ++e)
        CHECK(sol.eta[e] == Catch::Approx(from_witness[e]).margin(tol));
    CHECK(sol.variance == Catch::Approx(variance_of(sol.eta)).margin(1e-12));
    double total = 0.0;
    for (const double x : sol.eta) total += x;
    CHECK(total == Catch::Approx(double(g.vertex_count - 1)).margin(tol * g.edge_count()));
}

}  // namespace

TEST_CASE("variance_of") {
    CHECK(variance_of({1.0, 1.0, 1.0}) == Catch::Approx(0.0).margin(1e-15));
    CHECK(variance_of({0.0, 1.0}) == Catch::Approx(0.25).margin(1e-15));
    CHECK(variance_of({2.0 / 3, 2.0 / 3, 2.0 / 3, 1.0}) ==
          Catch::Approx(1.0 / 48).margin(1e-12));
}

TEST_CASE("minimum weight spanning tree oracle") {
    const Graph tri = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(min_weight_spanning_tree(tri, {3.0, 1.0, 2.0}).edge_set == std::vector<int>{1, 2});
    CHECK(min_weight_spanning_tree(tri, {-5.0, 1.0, 2.0}).edge_set == std::vector<int>{0, 1});
    // ties break toward the lower edge index
    CHECK(min_weight_spanning_tree(tri, {1.0, 1.0, 1.0}).edge_set == std::vector<int>{0, 1});
    CHECK_THROWS_AS(min_weight_spanning_tree(build_graph(3, {{0, 1}}), {1.0}), InputError);
}

TEST_CASE("exact solver on symmetric graphs: constant optimum") {
    struct Case {
        const char* name;
        Graph g;
        double level;
    };
    const Case cases[] = {
        {"digon", build_graph(2, {{0, 1}, {0, 1}}), 0.5},
        {"triple_digon", build_graph(2, {{0, 1}, {0, 1}, {0, 1}}), 1.0 / 3},
        {"triangle", build_graph(3, {{0, 1}, {0, 2}, {1, 2}}), 2.0 / 3},
        {"square", build_grid_graph(2, 2), 0.75},
        {"bowtie", build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}), 2.0 / 3},
        {"double_triangle", build_graph(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}}), 0.5},
    };
    for (const auto& c : cases) {
        INFO(c.name);
        const FeuSolution sol = solve_feu_exact(c.g);
        CHECK(sol.converged);
        CHECK(sol.homogeneous);
        CHECK(sol.variance <= 1e-12);
        for (const double x : sol.eta) CHECK(x == Catch::Approx(c.level).margin(1e-7));
        check_solution_consistency(c.g, sol, 1e-7);
    }
}

TEST_CASE("exact solver on modified grids: every edge at one half") {
    for (const auto mn : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
        INFO(mn.first << "," << mn.second);
        const Graph g = build_modified_grid(mn.first, mn.second).graph;
        const FeuSolution sol = solve_feu_exact(g);
        CHECK(sol.homogeneous);
        CHECK(sol.variance <= 1e-12);
        for (const double x : sol.eta) CHECK(x == Catch::Approx(0.5).margin(1e-7));
    }
}

TEST_CASE("exact solver on the pendant graph: known non-constant optimum") {
    const Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const FeuSolution sol = solve_feu_exact(g);
    CHECK_FALSE(sol.homogeneous);
    CHECK(sol.eta[0] == Catch::Approx(2.0 / 3).margin(1e-6));
    CHECK(sol.eta[1] == Catch::Approx(2.0 / 3).margin(1e-6));
    CHECK(sol.eta[2] == Catch::Approx(2.0 / 3).margin(1e-6));
    CHECK(sol.eta[3] == Catch::Approx(1.0).margin(1e-6));
    CHECK(sol.variance == Catch::Approx(1.0 / 48).margin(1e-9));
    check_solution_consistency(g, sol, 1e-7);
}

TEST_CASE("exact solver rejects oversized inputs via the tree-count gate") {
    CHECK_THROWS_AS(solve_feu_exact(build_grid_graph(5, 5)), InputError);
}

TEST_CASE("frank-wolfe matches the exact solver") {
    for (const auto& [name, g] : testsupport::small_corpus()) {
        INFO(name);
        const FeuSolution exact = solve_feu_exact(g);
        const FeuSolution fw = solve_feu_frank_wolfe(g, 1e-8, 200000, true);
        CHECK(fw.converged);
        REQUIRE(fw.eta.size() == exact.eta.size());
        for (std::size_t e = 0; e < fw.eta.size(); ++e)
            CHECK(fw.eta[e] == Catch::Approx(exact.eta[e]).margin(1e-5));
        check_solution_consistency(g, fw, 1e-6);
    }
}

TEST_CASE("vanilla frank-wolfe converges where the optimum is interior") {
    for (const char* name : {"triangle", "k4", "path2", "grid_3_3"}) {
        for (const auto& [n, g] : testsupport::small_corpus()) {
            if (n != name) continue;
            INFO(name);
            const FeuSolution sol = solve_feu_frank_wolfe(g);
            CHECK(sol.converged);
            CHECK(sol.gap <= 1e-8);
        }
    }
}

TEST_CASE("vanilla frank-wolfe flags nonconvergence instead of throwing") {
    // the modified grid optimum sits on a face, where the plain method zigzags
    const Graph g = build_modified_grid(2, 2).graph;
    const FeuSolution sol = solve_feu_frank_wolfe(g, 1e-8, 50, false);
    CHECK_FALSE(sol.converged);
    CHECK(sol.iterations == 50);
}

TEST_CASE("classification labels") {
    SECTION("strictly dense and homogeneous") {
        for (const char* name : {"digon", "triple_digon", "triangle", "k4", "grid_2_2"}) {
            for (const auto& [n, g] : testsupport::small_corpus()) {
                if (n != name) continue;
                INFO(name);
                const Classification c = classify_graph(g);
                CHECK(c.strictly_1_dense);
                CHECK(c.homogeneous);
            }
        }
    }
    SECTION("homogeneous but not strictly dense") {
        for (const char* name : {"double_triangle", "bowtie", "mg_2_2"}) {
            for (const auto& [n, g] : testsupport::small_corpus()) {
                if (n != name) continue;
                INFO(name);
                const Classification c = classify_graph(g);
                CHECK_FALSE(c.strictly_1_dense);
                CHECK(c.homogeneous);
            }
        }
    }
    SECTION("inhomogeneous") {
        const Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        const Classification c = classify_graph(g);
        CHECK_FALSE(c.strictly_1_dense);
        CHECK_FALSE(c.homogeneous);
        CHECK(c.scan.theta_max == Rational(3, 2));
        CHECK(c.density.theta == Rational(4, 3));
    }
}

TEST_CASE("deflation stage counts") {
    SECTION("digon collapses in one stage") {
        const DeflationSequence seq = deflate(build_graph(2, {{0, 1}, {0, 1}}));
        CHECK(seq.completed);
        CHECK(seq.stages.size() == 1);
        CHECK(seq.terminal.vertex_count == 1);
    }
    SECTION("single edge stops untouched") {
        const DeflationSequence seq = deflate(build_graph(2, {{0, 1}}));
        CHECK_FALSE(seq.completed);
        CHECK(seq.stages.empty());
        CHECK(seq.terminal.vertex_count == 2);
    }
    SECTION("modified grids take exactly m*n digon stages") {
        for (const auto mn : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {2, 3}}) {
            INFO(mn.first << "," << mn.second);
            const DeflationSequence seq = deflate(build_modified_grid(mn.first, mn.second).graph);
            CHECK(seq.completed);
            CHECK((int)seq.stages.size() == mn.first * mn.second);
            for (const DeflationStage& st : seq.stages) {
                CHECK(st.core_vertices.size() == 2);
                CHECK(st.core_density.theta == Rational(2, 1));
            }
        }
    }
    SECTION("pendant graph: triangle first, then the leftover edge") {
        const Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        const DeflationSequence seq = deflate(g);
        CHECK_FALSE(seq.completed);
        REQUIRE(seq.stages.size() == 1);
        CHECK(seq.stages[0].core_vertices == std::vector<int>{0, 1, 2});
        CHECK(seq.stages[0].core_density.theta == Rational(3, 2));
        CHECK(seq.terminal.vertex_count == 2);
        CHECK(seq.terminal.edge_count() == 1);
    }
    SECTION("quotient chain is consistent") {
        const DeflationSequence seq = deflate(build_modified_grid(2, 2).graph);
        Graph cur = seq.initial;
        for (const DeflationStage& st : seq.stages) {
            CHECK(st.quotient.graph.vertex_count == cur.vertex_count - 1);
            cur = st.quotient.graph;
        }
        CHECK(cur.vertex_count == 1);
    }
}

TEST_CASE("uniformize") {
    SECTION("square grid is already uniform") {
        const Graph g = build_grid_graph(2, 2);
        const UniformizeResult res = uniformize(g);
        CHECK(res.residual <= 1e-10);
        for (const double w : res.weights) CHECK(w == Catch::Approx(1.0).margin(1e-8));
    }
    SECTION("rectangular grid needs a real adjustment") {
        const Graph g = build_grid_graph(3, 2);
        const UniformizeResult res = uniformize(g);
        CHECK(res.residual <= 1e-10);
        const auto p = kirchhoff_edge_probabilities(g, res.weights);
        const double target = double(g.vertex_count - 1) / double(g.edge_count());
        for (const double x : p) CHECK(x == Catch::Approx(target).margin(1e-9));
        // geometric mean one
        double log_sum = 0.0;
        for (const double w : res.weights) log_sum += std::log(w);
        CHECK(log_sum == Catch::Approx(0.0).margin(1e-9));
    }
    SECTION("different starts land on the same weights") {
        const Graph g = build_grid_graph(3, 2);
        const UniformizeResult a = uniformize(g);
        EdgeWeights init(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) init[e] = 1.0 + 0.5 * (e % 3);
        const UniformizeResult b = uniformize(g, init);
        for (int e = 0; e < g.edge_count(); ++e)
            CHECK(a.weights[e] == Catch::Approx(b.weights[e]).margin(1e-6));
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(uniformize(build_graph(3, {{0, 1}, {1, 2}})), InputError);
        // strict density fails on the pendant graph even though it is connected
        CHECK_THROWS_AS(uniformize(build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})),
                        InputError);
        // biconnected but not strictly dense: doubled-edge triangle
        CHECK_THROWS_AS(uniformize(build_graph(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}})),
                        InputError);
    }
    SECTION("digon accepted under the vacuous convention") {
        const UniformizeResult res = uniformize(build_graph(2, {{0, 1}, {0, 1}}));
        CHECK(res.residual <= 1e-10);
    }
}
