// Command line front end. Exit codes: 0 ok, 1 bad input, 2 an iteration
// failed to converge.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairpeano/fairpeano.hpp"

namespace fp = fairpeano;

namespace {

std::pair<int, int> parse_grid_spec(const std::string& spec) {
    const std::size_t sep = spec.find_first_of(",xX");
    if (sep == std::string::npos || sep == 0 || sep + 1 >= spec.size())
        throw fp::InputError("grid spec must look like \"m,n\" or \"MxN\", got: " + spec);
    const auto part = [&](std::size_t from, std::size_t len) {
        const std::string s = spec.substr(from, len);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw fp::InputError("grid spec has a non-numeric part: " + spec);
        }
        if (used != s.size()) throw fp::InputError("grid spec has trailing junk: " + spec);
        return value;
    };
    return {part(0, sep), part(sep + 1, std::string::npos)};
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        const std::string s = spec.substr(pos, comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw fp::InputError("list has a non-numeric entry: " + spec);
        }
        if (used != s.size()) throw fp::InputError("list has trailing junk: " + spec);
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

struct SampleArgs {
    int n = 0;
    std::string grid_spec, weights_path, algorithm = "fair", out_path;
    std::uint64_t seed = 0;
};

int run_sample(const SampleArgs& a) {
    fp::ModifiedGrid grid;
    fp::TreeFile tf;
    if (a.n > 0) {
        const fp::SquareLattice lat = fp::build_square_lattice(a.n);
        grid = lat.grid;
        tf.n = a.n;
    } else {
        const auto [m, n] = parse_grid_spec(a.grid_spec);
        grid = fp::build_modified_grid(m, n);
        tf.grid = {m, n};
    }
    fp::RandomStream rng(fp::derive_seed(a.seed));
    if (a.algorithm == "fair") {
        if (!a.weights_path.empty())
            throw fp::InputError("weights apply to wilson or aldous-broder sampling only");
        tf.tree = fp::sample_fair_tree(grid, rng);
    } else {
        fp::WustAlgorithm alg;
        if (a.algorithm == "wilson")
            alg = fp::WustAlgorithm::wilson;
        else if (a.algorithm == "aldous-broder")
            alg = fp::WustAlgorithm::aldous_broder;
        else
            throw fp::InputError("unknown algorithm: " + a.algorithm);
        const fp::EdgeWeights w = a.weights_path.empty()
                                      ? fp::unit_weights(grid.graph)
                                      : fp::load_weights_file(a.weights_path, grid.graph);
        tf.tree = fp::sample_wust(grid.graph, w, rng, alg, grid.v0());
    }
    fp::save_tree_file(a.out_path, tf);
    return 0;
}

struct RenderArgs {
    std::string tree_path, color_mode = "plain", out_path;
    bool dual = false, curve = false;
    double canvas = 800.0;
};

int run_render(const RenderArgs& a) {
    const fp::TreeFile tf = fp::load_tree_file(a.tree_path);
    const fp::ColorMode mode = fp::parse_color_mode(a.color_mode);
    std::string svg;
    if (tf.n) {
        const fp::SquareLattice lat = fp::build_square_lattice(*tf.n);
        for (const int e : tf.tree.edge_set)
            if (e < 0 || e >= lat.grid.graph.edge_count())
                throw fp::InputError("tree file has an edge index out of range");
        if (!fp::is_spanning_tree(lat.grid.graph, tf.tree))
            throw fp::InputError("tree file does not hold a spanning tree of its grid");
        fp::RenderScene scene;
        scene.lattice = &lat;
        scene.tree = &tf.tree;
        scene.color_mode = mode;
        scene.canvas = a.canvas;
        fp::DualTree dual;
        if (a.dual) {
            dual = fp::dual_tree(lat, tf.tree);
            scene.dual = &dual;
        }
        fp::LatticeCurve curve;
        if (a.curve) {
            curve = fp::peano_curve(lat, tf.tree);
            scene.curve = &curve;
        }
        svg = fp::render_svg(scene);
    } else {
        if (a.dual || a.curve || mode != fp::ColorMode::plain)
            throw fp::InputError("dual, curve, and coloring need a lattice tree file (\"n\")");
        const auto [m, n] = *tf.grid;
        const fp::ModifiedGrid grid = fp::build_modified_grid(m, n);
        for (const int e : tf.tree.edge_set)
            if (e < 0 || e >= grid.graph.edge_count())
                throw fp::InputError("tree file has an edge index out of range");
        if (!fp::is_spanning_tree(grid.graph, tf.tree))
            throw fp::InputError("tree file does not hold a spanning tree of its grid");
        svg = fp::render_grid_svg(grid, tf.tree, a.canvas);
    }
    fp::write_text_atomic(a.out_path, svg);
    return 0;
}

struct ProbsArgs {
    std::string graph_path, weights_path;
    bool exact = false;
    long long mc = 0;
    std::uint64_t seed = 0;
};

int run_probs(const ProbsArgs& a) {
    const fp::LoadedGraph lg = fp::load_graph_file(a.graph_path);
    const fp::EdgeWeights w = a.weights_path.empty()
                                  ? lg.weights
                                  : fp::load_weights_file(a.weights_path, lg.graph);
    std::vector<double> probs;
    if (a.exact) {
        probs = fp::kirchhoff_edge_probabilities(lg.graph, w);
    } else {
        if (a.mc < 1) throw fp::InputError("--mc needs a positive sample count");
        fp::RandomStream rng(fp::derive_seed(a.seed));
        std::vector<long long> counts(lg.graph.edge_count(), 0);
        for (long long i = 0; i < a.mc; ++i) {
            const fp::SpanningTree t =
                fp::sample_wust(lg.graph, w, rng, fp::WustAlgorithm::wilson, 0);
            for (const int e : t.edge_set) ++counts[e];
        }
        probs.resize(counts.size());
        for (std::size_t e = 0; e < counts.size(); ++e)
            probs[e] = double(counts[e]) / double(a.mc);
    }
    std::cout << fp::edge_vector_json(probs, "probabilities");
    return 0;
}

struct FeuArgs {
    std::string graph_path, solver = "exact";
    double tol = 1e-8;
    long long max_iter = 200000;
};

int run_feu(const FeuArgs& a) {
    const fp::LoadedGraph lg = fp::load_graph_file(a.graph_path);
    fp::FeuSolution sol;
    if (a.solver == "exact")
        sol = fp::solve_feu_exact(lg.graph, a.tol);
    else if (a.solver == "frank-wolfe")
        sol = fp::solve_feu_frank_wolfe(lg.graph, a.tol, a.max_iter);
    else
        throw fp::InputError("unknown solver: " + a.solver);
    std::cout << fp::feu_solution_json(sol);
    return sol.converged ? 0 : 2;
}

int run_classify(const std::string& graph_path) {
    const fp::LoadedGraph lg = fp::load_graph_file(graph_path);
    std::cout << fp::classification_json(fp::classify_graph(lg.graph));
    return 0;
}

int run_deflate(const std::string& graph_path) {
    const fp::LoadedGraph lg = fp::load_graph_file(graph_path);
    std::cout << fp::deflation_json(fp::deflate(lg.graph));
    return 0;
}

struct UniformizeArgs {
    std::string graph_path;
    double tol = 1e-10;
    long long max_iter = 100000;
};

int run_uniformize(const UniformizeArgs& a) {
    const fp::LoadedGraph lg = fp::load_graph_file(a.graph_path);
    const fp::UniformizeResult res =
        fp::uniformize(lg.graph, lg.weights, a.tol, a.max_iter);
    std::cout << fp::uniformize_json(res);
    return 0;
}

struct ExperimentArgs {
    std::string kind, n_list, csv_path;
    long long trials = 0;
    std::uint64_t seed = 0;
};

int run_experiment_cmd(const ExperimentArgs& a) {
    fp::ExperimentConfig cfg;
    cfg.kind = fp::parse_experiment_kind(a.kind);
    cfg.n_list = parse_int_list(a.n_list);
    if (a.trials < 0) throw fp::InputError("--trials must be nonnegative");
    cfg.trials = (int)a.trials;
    cfg.seed = a.seed;
    cfg.csv_path = a.csv_path;
    if (cfg.trials == 0)
        std::cerr << "warning: zero trials, writing a header-only csv\n";
    const fp::ExperimentReport report = fp::run_experiment(cfg);
    for (const fp::AggregateRow& row : report.aggregates) {
        char line[256];
        std::snprintf(line, sizeof(line),
                      "%s n=%d trials=%d median=%.6g p90=%.6g max=%.6g pass_fraction=%.3f "
                      "threshold=%.6g\n",
                      fp::experiment_kind_name(report.kind), row.n, cfg.trials, row.median,
                      row.p90, row.max_value, row.pass_fraction,
                      fp::experiment_threshold(report.kind, row.n));
        std::cout << line;
    }
    char tail[128];
    std::snprintf(tail, sizeof(tail), "wall_seconds=%.3f csv=%s\n", report.wall_seconds,
                  a.csv_path.c_str());
    std::cout << tail;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair spanning trees on modified grids and their Peano curves"};
    app.require_subcommand(1);

    SampleArgs sample;
    CLI::App* cmd_sample = app.add_subcommand("sample", "draw a spanning tree");
    auto* opt_n = cmd_sample->add_option("--n", sample.n, "lattice size (interior grid is (n-1)x(n-1))");
    auto* opt_grid = cmd_sample->add_option("--grid", sample.grid_spec, "modified grid size, \"m,n\" or \"MxN\"");
    opt_n->excludes(opt_grid);
    opt_grid->excludes(opt_n);
    cmd_sample->add_option("--seed", sample.seed, "rng seed");
    cmd_sample->add_option("--weights", sample.weights_path, "edge weights file (wilson / aldous-broder)");
    cmd_sample->add_option("--algorithm", sample.algorithm, "fair | wilson | aldous-broder");
    cmd_sample->add_option("--out", sample.out_path, "output tree file")->required();

    RenderArgs render;
    CLI::App* cmd_render = app.add_subcommand("render", "draw a tree file as svg");
    cmd_render->add_option("--tree", render.tree_path, "tree file")->required();
    cmd_render->add_flag("--dual", render.dual, "draw the dual tree");
    cmd_render->add_flag("--curve", render.curve, "draw the space-filling curve");
    cmd_render->add_option("--color-mode", render.color_mode, "plain | closest_boundary_vertex");
    cmd_render->add_option("--canvas", render.canvas, "canvas size in px (min 64)");
    cmd_render->add_option("--out", render.out_path, "output svg file")->required();

    ProbsArgs probs;
    CLI::App* cmd_probs = app.add_subcommand("probs", "edge usage probabilities of the weighted tree law");
    cmd_probs->add_option("--graph", probs.graph_path, "graph file")->required();
    cmd_probs->add_option("--weights", probs.weights_path, "weights file, overrides the graph file");
    auto* opt_exact = cmd_probs->add_flag("--exact", probs.exact, "matrix-tree computation");
    auto* opt_mc = cmd_probs->add_option("--mc", probs.mc, "monte carlo with this many samples");
    opt_exact->excludes(opt_mc);
    opt_mc->excludes(opt_exact);
    cmd_probs->add_option("--seed", probs.seed, "rng seed for --mc");

    FeuArgs feu;
    CLI::App* cmd_feu = app.add_subcommand("feu", "fairest edge usage distribution");
    cmd_feu->add_option("--graph", feu.graph_path, "graph file")->required();
    cmd_feu->add_option("--solver", feu.solver, "exact | frank-wolfe");
    cmd_feu->add_option("--tol", feu.tol, "convergence tolerance");
    cmd_feu->add_option("--max-iter", feu.max_iter, "iteration cap (frank-wolfe)");

    std::string classify_graph_path;
    CLI::App* cmd_classify = app.add_subcommand("classify", "density and homogeneity report");
    cmd_classify->add_option("--graph", classify_graph_path, "graph file")->required();

    std::string deflate_graph_path;
    CLI::App* cmd_deflate = app.add_subcommand("deflate", "iterated densest-core contraction");
    cmd_deflate->add_option("--graph", deflate_graph_path, "graph file")->required();

    UniformizeArgs uniformize;
    CLI::App* cmd_uniformize = app.add_subcommand("uniformize", "weights equalizing edge probabilities");
    cmd_uniformize->add_option("--graph", uniformize.graph_path, "graph file")->required();
    cmd_uniformize->add_option("--tol", uniformize.tol, "residual tolerance");
    cmd_uniformize->add_option("--max-iter", uniformize.max_iter, "iteration cap");

    ExperimentArgs experiment;
    CLI::App* cmd_experiment = app.add_subcommand("experiment", "scaling statistics over random fair trees");
    cmd_experiment->add_option("--kind", experiment.kind, "diagonality | convergence | rw-max")->required();
    cmd_experiment->add_option("--n-list", experiment.n_list, "comma separated sizes, e.g. \"64,256\"")->required();
    cmd_experiment->add_option("--trials", experiment.trials, "trials per size")->required();
    cmd_experiment->add_option("--seed", experiment.seed, "master seed");
    cmd_experiment->add_option("--csv", experiment.csv_path, "output csv file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(cmd_sample)) {
            if ((opt_n->count() > 0) == (opt_grid->count() > 0))
                throw fp::InputError("pass exactly one of --n or --grid");
            if (opt_n->count() > 0 && sample.n < 2)
                throw fp::InputError("--n must be at least 2");
            return run_sample(sample);
        }
        if (app.got_subcommand(cmd_render)) return run_render(render);
        if (app.got_subcommand(cmd_probs)) {
            if ((opt_exact->count() > 0) == (opt_mc->count() > 0))
                throw fp::InputError("pass exactly one of --exact or --mc");
            return run_probs(probs);
        }
        if (app.got_subcommand(cmd_feu)) return run_feu(feu);
        if (app.got_subcommand(cmd_classify)) return run_classify(classify_graph_path);
        if (app.got_subcommand(cmd_deflate)) return run_deflate(deflate_graph_path);
        if (app.got_subcommand(cmd_uniformize)) return run_uniformize(uniformize);
        if (app.got_subcommand(cmd_experiment)) return run_experiment_cmd(experiment);
    } catch (const fp::NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fp::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
