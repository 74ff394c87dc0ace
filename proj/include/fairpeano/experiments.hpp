#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "fairpeano/branches.hpp"
#include "fairpeano/fileio.hpp"
#include "fairpeano/peano.hpp"
#include "fairpeano/rng.hpp"

namespace fairpeano {

enum class ExperimentKind { diagonality, convergence, rw_max };

inline const char* experiment_kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::diagonality: return "diagonality";
        case ExperimentKind::convergence: return "convergence";
        default: return "rw-max";
    }
}

inline ExperimentKind parse_experiment_kind(const std::string& s) {
    if (s == "diagonality") return ExperimentKind::diagonality;
    if (s == "convergence") return ExperimentKind::convergence;
    if (s == "rw-max") return ExperimentKind::rw_max;
    throw InputError("unknown experiment kind: " + s);
}

// Per-trial pass thresholds. Diagonality and convergence use the asymptotic
// bounds (the convergence one widened by the region discretization error);
// the walk ratio gets a soft sanity band, nothing sharper is claimed for it.
inline double experiment_threshold(ExperimentKind kind, int n) {
    switch (kind) {
        case ExperimentKind::diagonality: return 0.5 * std::pow(double(n), -0.25);
        case ExperimentKind::convergence:
            return 3.0 * std::pow(double(n), -0.25) + std::sqrt(2.0) / (2.0 * n);
        default: return 1.5;
    }
}

inline std::vector<double> default_b_grid() {
    std::vector<double> grid(21);
    for (int k = 0; k <= 20; ++k) grid[k] = (2.0 * k) / 20.0;
    return grid;
}

inline double branch_count(int n) {
    // integer part of n^(1/4); the epsilon keeps exact fourth powers from
    // rounding down through pow's last-bit error
    return std::floor(std::pow(double(n), 0.25) + 1e-9);
}

// One diagonality measurement: Hausdorff distance between the branch bundle
// from floor(n^(1/4)) anchors and its anti-diagonal segments.
inline double diagonality_trial(const SquareLattice& lat, RandomStream& rng) {
    const SpanningTree t = sample_fair_tree(lat.grid, rng);
    const BranchBundle bundle = branch_paths(lat, t, branch_count(lat.n));
    const double res = 1.0 / (2.0 * lat.n);
    const DiagonalLines lines = diagonal_lines(lat, bundle.anchors, res);
    return hausdorff_distance(bundle.points, lines.samples, res);
}

inline double diagonality_trial(int n, RandomStream& rng) {
    if (n < 16) throw InputError("diagonality_trial needs n >= 16");
    const SquareLattice lat = build_square_lattice(n);
    return diagonality_trial(lat, rng);
}

struct ConvergenceResult {
    std::vector<double> values;  // per b
    double sup = 0.0;
};

// One convergence measurement: coverage defect of the stopped curve against
// Q_b for every b in the grid, and the worst case over b.
inline ConvergenceResult convergence_trial(const SquareLattice& lat,
                                           const std::vector<double>& b_grid,
                                           RandomStream& rng) {
    const SpanningTree t = sample_fair_tree(lat.grid, rng);
    const LatticeCurve curve = peano_curve(lat, t);
    const double res = 1.0 / (2.0 * lat.n);
    ConvergenceResult out;
    out.values.reserve(b_grid.size());
    for (const double b : b_grid) {
        const std::size_t stop = stopping_index(curve, b);
        const double cov = coverage_radius(curve, stop, Region{b, res});
        out.values.push_back(cov);
        out.sup = std::max(out.sup, cov);
    }
    return out;
}

inline ConvergenceResult convergence_trial(int n, const std::vector<double>& b_grid,
                                           RandomStream& rng) {
    if (n < 16) throw InputError("convergence_trial needs n >= 16");
    const SquareLattice lat = build_square_lattice(n);
    return convergence_trial(lat, b_grid, rng);
}

// Running-maximum ratio M_k / sqrt(2 k ln ln k) of a simple +-1 walk.
inline double rw_max_ratio(long long k, RandomStream& rng) {
    if (k < 16) throw InputError("rw_max_ratio needs k >= 16");
    long long s = 0, m = 0;
    for (long long j = 0; j < k; ++j) {
        s += rng.coin() ? 1 : -1;
        m = std::max(m, std::llabs(s));
    }
    return double(m) / std::sqrt(2.0 * double(k) * std::log(std::log(double(k))));
}

struct TrialRecord {
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct AggregateRow {
    int n = 0;
    double median = 0.0;
    double p90 = 0.0;
    double max_value = 0.0;
    double pass_fraction = 0.0;
};

struct ExperimentReport {
    ExperimentKind kind = ExperimentKind::diagonality;
    std::vector<TrialRecord> records;
    std::vector<AggregateRow> aggregates;
    double wall_seconds = 0.0;  // reported, never serialized into the CSV
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::diagonality;
    std::vector<int> n_list;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string csv_path;  // empty: skip writing
    int threads = 0;       // 0: FAIRPEANO_THREADS, else hardware
    std::vector<double> b_grid = default_b_grid();
};

namespace detail {

inline int experiment_thread_count(int requested, std::size_t tasks) {
    int count = requested;
    if (count <= 0) {
        if (const char* env = std::getenv("FAIRPEANO_THREADS")) count = std::atoi(env);
    }
    if (count <= 0) count = (int)std::thread::hardware_concurrency();
    if (count <= 0) count = 1;
    if ((std::size_t)count > tasks) count = (int)(tasks ? tasks : 1);
    return count;
}

inline std::vector<AggregateRow> aggregate_records(const ExperimentConfig& cfg,
                                                   const std::vector<TrialRecord>& records) {
    std::vector<AggregateRow> rows;
    if (cfg.trials <= 0) return rows;
    const std::size_t T = (std::size_t)cfg.trials;
    for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
        std::vector<double> stats(T);
        int passes = 0;
        for (std::size_t i = 0; i < T; ++i) {
            const TrialRecord& r = records[ni * T + i];
            stats[i] = r.statistic;
            passes += r.pass ? 1 : 0;
        }
        std::sort(stats.begin(), stats.end());
        AggregateRow row;
        row.n = cfg.n_list[ni];
        row.median = (T % 2 == 1) ? stats[T / 2] : 0.5 * (stats[T / 2 - 1] + stats[T / 2]);
        const std::size_t p90_idx = (std::size_t)std::ceil(0.9 * double(T)) - 1;
        row.p90 = stats[p90_idx];
        row.max_value = stats.back();
        row.pass_fraction = double(passes) / double(T);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace detail

inline std::string experiment_csv(const ExperimentReport& report) {
    std::string out = "experiment,n,trial,seed,statistic,threshold,pass\n";
    char buf[256];
    const char* name = experiment_kind_name(report.kind);
    for (const TrialRecord& r : report.records) {
        std::snprintf(buf, sizeof(buf), "%s,%d,%d,%llu,%.17g,%.17g,%d\n", name, r.n, r.trial,
                      (unsigned long long)r.seed, r.statistic, r.threshold, r.pass ? 1 : 0);
        out += buf;
    }
    for (const AggregateRow& a : report.aggregates) {
        std::snprintf(buf, sizeof(buf), "# n=%d median=%.17g p90=%.17g max=%.17g pass_fraction=%.17g\n",
                      a.n, a.median, a.p90, a.max_value, a.pass_fraction);
        out += buf;
    }
    return out;
}

// Runs trials across a thread pool. Task (n_index, trial) owns the record
// slot n_index*trials + trial and a random stream derived from (seed, n,
// trial), so the report is identical whatever FAIRPEANO_THREADS says.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.n_list.empty()) throw InputError("experiment needs a nonempty n list");
    if (cfg.trials < 0) throw InputError("experiment trial count cannot be negative");
    for (const int n : cfg.n_list)
        if (n < 16) throw InputError("experiment sizes must be >= 16");
    if (cfg.kind == ExperimentKind::convergence) {
        if (cfg.b_grid.empty()) throw InputError("convergence experiment needs a b grid");
        for (const double b : cfg.b_grid)
            if (b < 0.0 || b > 2.0) throw InputError("b grid values must lie in [0,2]");
    }

    const auto started = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.kind = cfg.kind;

    std::map<int, SquareLattice> lattices;
    if (cfg.kind != ExperimentKind::rw_max)
        for (const int n : cfg.n_list)
            if (!lattices.count(n)) lattices.emplace(n, build_square_lattice(n));

    const std::size_t tasks = cfg.n_list.size() * (std::size_t)cfg.trials;
    report.records.resize(tasks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        try {
            for (;;) {
                const std::size_t task = next.fetch_add(1);
                if (task >= tasks) return;
                const std::size_t ni = task / (std::size_t)cfg.trials;
                const int trial = (int)(task % (std::size_t)cfg.trials);
                const int n = cfg.n_list[ni];
                TrialRecord rec;
                rec.n = n;
                rec.trial = trial;
                rec.seed = derive_seed(cfg.seed, (std::uint64_t)n, (std::uint64_t)trial);
                RandomStream rng(rec.seed);
                switch (cfg.kind) {
                    case ExperimentKind::diagonality:
                        rec.statistic = diagonality_trial(lattices.at(n), rng);
                        break;
                    case ExperimentKind::convergence:
                        rec.statistic = convergence_trial(lattices.at(n), cfg.b_grid, rng).sup;
                        break;
                    case ExperimentKind::rw_max:
                        rec.statistic = rw_max_ratio(n, rng);
                        break;
                }
                rec.threshold = experiment_threshold(cfg.kind, n);
                rec.pass = rec.statistic <= rec.threshold;
                report.records[task] = rec;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    const int thread_count = detail::experiment_thread_count(cfg.threads, tasks);
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    report.aggregates = detail::aggregate_records(cfg, report.records);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (!cfg.csv_path.empty()) write_text_atomic(cfg.csv_path, experiment_csv(report));
    return report;
}

}  // namespace fairpeano
