#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fairpeano/experiments.hpp"
#include "fairpeano/fileio.hpp"

using namespace fairpeano;

TEST_CASE("experiment kinds parse and print") {
    CHECK(parse_experiment_kind("diagonality") == ExperimentKind::diagonality);
    CHECK(parse_experiment_kind("convergence") == ExperimentKind::convergence);
    CHECK(parse_experiment_kind("rw-max") == ExperimentKind::rw_max);
    CHECK_THROWS_AS(parse_experiment_kind("nope"), InputError);
    CHECK(std::string(experiment_kind_name(ExperimentKind::rw_max)) == "rw-max");
}

TEST_CASE("thresholds") {
    CHECK(experiment_threshold(ExperimentKind::diagonality, 256) ==
          Catch::Approx(0.5 / 4.0));  // 256^(1/4) = 4
    CHECK(experiment_threshold(ExperimentKind::convergence, 256) ==
          Catch::Approx(3.0 / 4.0 + std::sqrt(2.0) / 512.0));
    CHECK(experiment_threshold(ExperimentKind::rw_max, 999) == Catch::Approx(1.5));
}

TEST_CASE("branch counts take the integer fourth root") {
    CHECK(branch_count(16) == 2.0);
    CHECK(branch_count(81) == 3.0);
    CHECK(branch_count(255) == 3.0);
    CHECK(branch_count(256) == 4.0);
    CHECK(branch_count(1024) == 5.0);
}

TEST_CASE("default b grid") {
    const auto grid = default_b_grid();
    REQUIRE(grid.size() == 21);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 2.0);
    CHECK(grid[10] == Catch::Approx(1.0));
}

TEST_CASE("seed derivation separates trials") {
    CHECK(derive_seed(1, 64, 0) != derive_seed(1, 64, 1));
    CHECK(derive_seed(1, 64, 0) != derive_seed(1, 128, 0));
    CHECK(derive_seed(1, 64, 0) != derive_seed(2, 64, 0));
    CHECK(derive_seed(1, 64, 3) == derive_seed(1, 64, 3));
}

TEST_CASE("diagonality trial") {
    RandomStream a(derive_seed(9, 16, 0)), b(derive_seed(9, 16, 0));
    const double x = diagonality_trial(16, a);
    const double y = diagonality_trial(16, b);
    CHECK(x == y);          // deterministic in the stream
    CHECK(x > 0.0);
    CHECK(x < 1.0);         // it is a distance inside the unit square
    RandomStream c(1);
    CHECK_THROWS_AS(diagonality_trial(8, c), InputError);
}

TEST_CASE("convergence trial") {
    const auto b_grid = default_b_grid();
    RandomStream rng(derive_seed(9, 16, 1));
    const ConvergenceResult res = convergence_trial(16, b_grid, rng);
    REQUIRE(res.values.size() == b_grid.size());
    double max_v = 0.0;
    for (const double v : res.values) {
        CHECK(v >= 0.0);
        CHECK(v <= std::sqrt(2.0));
        max_v = std::max(max_v, v);
    }
    CHECK(res.sup == Catch::Approx(max_v));
    RandomStream c(1);
    CHECK_THROWS_AS(convergence_trial(8, b_grid, c), InputError);
}

TEST_CASE("random walk maximum ratio") {
    RandomStream a(7), b(7);
    const double x = rw_max_ratio(100000, a);
    CHECK(x == rw_max_ratio(100000, b));
    CHECK(x > 0.0);
    CHECK(x < 2.5);  // LIL scale: wildly larger values would mean a bug
    RandomStream c(1);
    CHECK_THROWS_AS(rw_max_ratio(8, c), InputError);
}

TEST_CASE("rw-max ratios sit at the law-of-iterated-logarithm scale") {
    // 64 pinned walks; the normalized maximum should hover below 1
    RandomStream rng(2026);
    std::vector<double> vals;
    for (int i = 0; i < 64; ++i) vals.push_back(rw_max_ratio(65536, rng));
    std::sort(vals.begin(), vals.end());
    const double median = 0.5 * (vals[31] + vals[32]);
    CHECK(median > 0.2);
    CHECK(median < 1.0);
    CHECK(vals.back() < 2.0);
}

TEST_CASE("run_experiment plumbing") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::rw_max;
    cfg.n_list = {64, 128};
    cfg.trials = 5;
    cfg.seed = 11;
    cfg.threads = 2;

    const ExperimentReport report = run_experiment(cfg);
    REQUIRE(report.records.size() == 10);
    REQUIRE(report.aggregates.size() == 2);
    CHECK(report.wall_seconds >= 0.0);

    SECTION("records carry their slot data") {
        for (std::size_t i = 0; i < report.records.size(); ++i) {
            const TrialRecord& r = report.records[i];
            CHECK(r.n == cfg.n_list[i / 5]);
            CHECK(r.trial == (int)(i % 5));
            CHECK(r.seed == derive_seed(cfg.seed, (std::uint64_t)r.n, (std::uint64_t)r.trial));
            CHECK(r.threshold == Catch::Approx(1.5));
            CHECK(r.pass == (r.statistic <= r.threshold));
        }
    }
    SECTION("aggregates match a hand rollup") {
        for (std::size_t ni = 0; ni < 2; ++ni) {
            std::vector<double> stats;
            for (int t = 0; t < 5; ++t) stats.push_back(report.records[ni * 5 + t].statistic);
            std::sort(stats.begin(), stats.end());
            const AggregateRow& row = report.aggregates[ni];
            CHECK(row.n == cfg.n_list[ni]);
            CHECK(row.median == Catch::Approx(stats[2]));
            CHECK(row.p90 == Catch::Approx(stats[4]));  // ceil(4.5)-1 = 4
            CHECK(row.max_value == Catch::Approx(stats[4]));
        }
    }
    SECTION("thread count does not change the records") {
        ExperimentConfig serial = cfg;
        serial.threads = 1;
        const ExperimentReport again = run_experiment(serial);
        REQUIRE(again.records.size() == report.records.size());
        for (std::size_t i = 0; i < report.records.size(); ++i)
            CHECK(again.records[i].statistic == report.records[i].statistic);
        CHECK(experiment_csv(again) == experiment_csv(report));
    }
}

TEST_CASE("experiment csv format") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::rw_max;
    cfg.n_list = {32};
    cfg.trials = 2;
    cfg.seed = 4;
    cfg.threads = 1;
    const ExperimentReport report = run_experiment(cfg);
    const std::string csv = experiment_csv(report);

    REQUIRE(csv.rfind("experiment,n,trial,seed,statistic,threshold,pass\n", 0) == 0);
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const std::size_t nl = csv.find('\n', pos);
        lines.push_back(csv.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 4);  // header, two rows, one aggregate
    CHECK(lines[1].rfind("rw-max,32,0,", 0) == 0);
    CHECK(lines[2].rfind("rw-max,32,1,", 0) == 0);
    CHECK(lines[3].rfind("# n=32 median=", 0) == 0);
    CHECK(csv.find("wall") == std::string::npos);
    // pass column is the last character of each data row
    for (int i = 1; i <= 2; ++i) {
        const char last = lines[i].back();
        CHECK((last == '0' || last == '1'));
    }
}

TEST_CASE("experiment csv lands on disk atomically") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::rw_max;
    cfg.n_list = {16};
    cfg.trials = 1;
    cfg.threads = 1;
    cfg.csv_path = "scaling_test_out.csv";
    const ExperimentReport report = run_experiment(cfg);
    CHECK(read_file_text(cfg.csv_path) == experiment_csv(report));
    std::remove((cfg.csv_path + ".tmp").c_str());
    std::remove(cfg.csv_path.c_str());
}

TEST_CASE("zero trials still writes the header") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::diagonality;
    cfg.n_list = {16};
    cfg.trials = 0;
    cfg.threads = 1;
    const ExperimentReport report = run_experiment(cfg);
    CHECK(report.records.empty());
    CHECK(report.aggregates.empty());
    CHECK(experiment_csv(report) == "experiment,n,trial,seed,statistic,threshold,pass\n");
}

TEST_CASE("experiment input validation") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::diagonality;
    cfg.trials = 1;
    CHECK_THROWS_AS(run_experiment(cfg), InputError);  // empty n list
    cfg.n_list = {8};
    CHECK_THROWS_AS(run_experiment(cfg), InputError);  // too small
    cfg.n_list = {16};
    cfg.trials = -1;
    CHECK_THROWS_AS(run_experiment(cfg), InputError);
    cfg.trials = 1;
    cfg.kind = ExperimentKind::convergence;
    cfg.b_grid = {0.5, 2.5};
    CHECK_THROWS_AS(run_experiment(cfg), InputError);  // b out of range
}

TEST_CASE("a small diagonality experiment runs end to end") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::diagonality;
    cfg.n_list = {16};
    cfg.trials = 6;
    cfg.seed = 21;
    cfg.threads = 3;
    const ExperimentReport report = run_experiment(cfg);
    REQUIRE(report.records.size() == 6);
    for (const TrialRecord& r : report.records) {
        CHECK(r.statistic > 0.0);
        CHECK(r.statistic < 1.5);
        CHECK(r.threshold == Catch::Approx(0.25));  // 0.5 * 16^(-1/4)
    }
}

TEST_CASE("a small convergence experiment runs end to end") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::convergence;
    cfg.n_list = {16};
    cfg.trials = 3;
    cfg.seed = 22;
    cfg.threads = 3;
    const ExperimentReport report = run_experiment(cfg);
    REQUIRE(report.records.size() == 3);
    for (const TrialRecord& r : report.records) {
        CHECK(r.statistic > 0.0);
        CHECK(r.statistic <= std::sqrt(2.0));
    }
}
