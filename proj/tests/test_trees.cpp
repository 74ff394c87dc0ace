#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "fairpeano/enumerate.hpp"
#include "fairpeano/fair_trees.hpp"
#include "fairpeano/kirchhoff.hpp"
#include "fairpeano/tree_pmf.hpp"
#include "fairpeano/wust.hpp"
#include "support.hpp"

using namespace fairpeano;

TEST_CASE("spanning tree recognition") {
    const Graph tri = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(is_spanning_tree(tri, make_tree({0, 1})));
    CHECK(is_spanning_tree(tri, make_tree({1, 2})));
    CHECK_FALSE(is_spanning_tree(tri, make_tree({0})));        // too small
    CHECK_FALSE(is_spanning_tree(tri, make_tree({0, 1, 2})));  // too big

    const Graph square = build_grid_graph(2, 2);
    CHECK_FALSE(is_spanning_tree(square, make_tree({0, 1, 2, 3})));  // the full cycle

    const SpanningTree t = make_tree({2, 0});
    CHECK(t.edge_set == std::vector<int>{0, 2});  // sorted on construction
    CHECK(tree_contains(t, 2));
    CHECK_FALSE(tree_contains(t, 1));
}

TEST_CASE("enumeration matches the matrix-tree count on the corpus") {
    for (const auto& [name, g] : testsupport::small_corpus()) {
        INFO(name);
        const auto trees = enumerate_spanning_trees(g);
        CHECK(double(trees.size()) == Catch::Approx(matrix_tree_count(g)).epsilon(1e-9));
        std::set<std::vector<int>> dedup;
        for (const auto& t : trees) {
            CHECK(is_spanning_tree(g, t));
            dedup.insert(t.edge_set);
        }
        CHECK(dedup.size() == trees.size());
    }
}

TEST_CASE("known tree counts") {
    CHECK(enumerate_spanning_trees(build_graph(3, {{0, 1}, {0, 2}, {1, 2}})).size() == 3);
    CHECK(enumerate_spanning_trees(
              build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
              .size() == 16);
    CHECK(enumerate_spanning_trees(build_grid_graph(2, 2)).size() == 4);
    CHECK(enumerate_spanning_trees(build_grid_graph(2, 3)).size() == 15);
    CHECK(enumerate_spanning_trees(build_grid_graph(3, 3)).size() == 192);

    CHECK(enumerate_spanning_trees(build_modified_grid(1, 1).graph).size() == 2);
    CHECK(enumerate_spanning_trees(build_modified_grid(1, 2).graph).size() == 5);
    CHECK(enumerate_spanning_trees(build_modified_grid(2, 2).graph).size() == 36);
    CHECK(enumerate_spanning_trees(build_modified_grid(2, 3).graph).size() == 281);
    CHECK(matrix_tree_count(build_modified_grid(3, 3).graph) == Catch::Approx(6728.0));
}

TEST_CASE("enumeration cap guards blowup") {
    CHECK_THROWS_AS(enumerate_spanning_trees(build_grid_graph(3, 3), 100), InputError);
}

TEST_CASE("kirchhoff probabilities: hand-checked cases") {
    SECTION("digon splits evenly") {
        const Graph g = build_graph(2, {{0, 1}, {0, 1}});
        const auto p = kirchhoff_edge_probabilities(g, unit_weights(g));
        CHECK(p[0] == Catch::Approx(0.5).margin(1e-12));
        CHECK(p[1] == Catch::Approx(0.5).margin(1e-12));
    }
    SECTION("weighted triangle (2,1,1)") {
        const Graph g = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
        const auto p = kirchhoff_edge_probabilities(g, {2.0, 1.0, 1.0});
        CHECK(p[0] == Catch::Approx(4.0 / 5.0).margin(1e-12));
        CHECK(p[1] == Catch::Approx(3.0 / 5.0).margin(1e-12));
        CHECK(p[2] == Catch::Approx(3.0 / 5.0).margin(1e-12));
    }
    SECTION("bridge is always used") {
        const Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        const auto p = kirchhoff_edge_probabilities(g, unit_weights(g));
        CHECK(p[3] == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("kirchhoff probabilities sum to vertex_count - 1") {
    for (const auto& [name, g] : testsupport::small_corpus()) {
        INFO(name);
        for (const EdgeWeights& w : {unit_weights(g), testsupport::mod3_weights(g)}) {
            const auto p = kirchhoff_edge_probabilities(g, w);
            double total = 0.0;
            for (const double x : p) {
                CHECK(x > 0.0);
                CHECK(x <= 1.0 + 1e-12);
                total += x;
            }
            CHECK(total == Catch::Approx(double(g.vertex_count - 1)).margin(1e-9));
        }
    }
}

TEST_CASE("kirchhoff matches enumeration everywhere") {
    for (const auto& [name, g] : testsupport::small_corpus()) {
        INFO(name);
        for (const EdgeWeights& w : {unit_weights(g), testsupport::mod3_weights(g)}) {
            const auto exact = kirchhoff_edge_probabilities(g, w);
            const auto brute = pmf_edge_probabilities(g, weighted_enumeration_pmf(g, w));
            REQUIRE(exact.size() == brute.size());
            for (std::size_t e = 0; e < exact.size(); ++e)
                CHECK(exact[e] == Catch::Approx(brute[e]).margin(1e-9));
        }
    }
}

TEST_CASE("weight validation") {
    const Graph g = build_graph(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(kirchhoff_edge_probabilities(g, {1.0}), InputError);
    CHECK_THROWS_AS(kirchhoff_edge_probabilities(g, {1.0, 0.0}), InputError);
    CHECK_THROWS_AS(kirchhoff_edge_probabilities(g, {1.0, -2.0}), InputError);
}

TEST_CASE("wust samplers produce valid trees deterministically") {
    const Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (const auto alg : {WustAlgorithm::wilson, WustAlgorithm::aldous_broder}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            RandomStream rng(seed);
            const SpanningTree t = sample_wust(g, unit_weights(g), rng, alg);
            CHECK(is_spanning_tree(g, t));
        }
        RandomStream a(12345), b(12345);
        CHECK(sample_wust(g, unit_weights(g), a, alg).edge_set ==
              sample_wust(g, unit_weights(g), b, alg).edge_set);
    }
    RandomStream rng(1);
    CHECK_THROWS_AS(sample_wust(build_graph(3, {{0, 1}}), {1.0}, rng, WustAlgorithm::wilson),
                    InputError);
    CHECK_THROWS_AS(sample_wust(g, unit_weights(g), rng, WustAlgorithm::wilson, 9), InputError);
}

TEST_CASE("wust root choice does not change the law's support behavior") {
    // quick smoke: every root yields valid trees
    const Graph g = build_modified_grid(2, 2).graph;
    for (int root = 0; root < g.vertex_count; ++root) {
        RandomStream rng(77 + root);
        CHECK(is_spanning_tree(g, sample_wust(g, unit_weights(g), rng,
                                              WustAlgorithm::aldous_broder, root)));
    }
}

TEST_CASE("fair trees: masks, cells, partners") {
    const ModifiedGrid grid = build_modified_grid(2, 2);

    SECTION("every mask gives a fair spanning tree") {
        for (std::uint64_t mask = 0; mask < 16; ++mask) {
            const SpanningTree t = fair_tree_from_mask(grid, mask);
            CHECK(is_spanning_tree(grid.graph, t));
            CHECK(is_fair_tree(grid, t));
            CHECK(cell_usage_counts(grid, t) == std::vector<int>{1, 1, 1, 1});
        }
    }
    SECTION("fair count is 2^(mn) among all spanning trees") {
        int fair = 0;
        for (const auto& t : enumerate_spanning_trees(grid.graph))
            if (is_fair_tree(grid, t)) ++fair;
        CHECK(fair == 16);
    }
    SECTION("partner is the complement and an involution") {
        for (std::uint64_t mask : {0ull, 5ull, 9ull, 15ull}) {
            const SpanningTree t = fair_tree_from_mask(grid, mask);
            const SpanningTree p = partner_tree(grid, t);
            CHECK(is_fair_tree(grid, p));
            CHECK(p.edge_set == complement_edges(grid, t));
            CHECK(partner_tree(grid, p).edge_set == t.edge_set);
        }
    }
    SECTION("witness exists exactly for the non-fair spanning trees") {
        for (const auto& t : enumerate_spanning_trees(grid.graph)) {
            const auto w = forbidden_tree_witness(grid, t);
            if (is_fair_tree(grid, t)) {
                CHECK_FALSE(w.has_value());
            } else {
                REQUIRE(w.has_value());
                const auto counts = cell_usage_counts(grid, t);
                CHECK(counts[w->first] == 2);
                CHECK(counts[w->second] == 0);
            }
        }
    }
    SECTION("sampler is deterministic and fair") {
        RandomStream a(99), b(99);
        const SpanningTree t1 = sample_fair_tree(grid, a);
        const SpanningTree t2 = sample_fair_tree(grid, b);
        CHECK(t1.edge_set == t2.edge_set);
        CHECK(is_fair_tree(grid, t1));
    }
}

TEST_CASE("a concrete forbidden tree on the 3x3 modified grid") {
    const ModifiedGrid grid = build_modified_grid(3, 3);
    const SpanningTree fair = make_tree({0, 3, 5, 6, 8, 11, 12, 15, 17});
    CHECK(is_fair_tree(grid, fair));
    CHECK_FALSE(forbidden_tree_witness(grid, fair).has_value());

    const SpanningTree forbidden = make_tree({0, 3, 6, 8, 9, 11, 12, 15, 17});
    CHECK(is_spanning_tree(grid.graph, forbidden));
    CHECK_FALSE(is_fair_tree(grid, forbidden));
    const auto w = forbidden_tree_witness(grid, forbidden);
    REQUIRE(w.has_value());
    CHECK(w->first == 4);
    CHECK(w->second == 2);
}

TEST_CASE("wust on a weighted digon matches the odds") {
    const Graph g = build_graph(2, {{0, 1}, {0, 1}});
    const EdgeWeights w = {3.0, 1.0};
    RandomStream rng(4242);
    int first = 0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i)
        if (sample_wust(g, w, rng, WustAlgorithm::wilson).edge_set[0] == 0) ++first;
    // p = 3/4, sd ~ 0.0031; allow 5 sigma
    CHECK(std::abs(double(first) / trials - 0.75) < 0.016);
}
