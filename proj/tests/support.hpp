#pragma once

// Shared fixtures for the test binaries: the small-graph corpus every oracle
// comparison runs over, plus a subprocess runner for exercising the CLI.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fairpeano/graph.hpp"
#include "fairpeano/grid.hpp"
#include "fairpeano/kirchhoff.hpp"
#include "fairpeano/modified_grid.hpp"

namespace testsupport {

struct NamedGraph {
    std::string name;
    fairpeano::Graph graph;
};

inline std::vector<NamedGraph> small_corpus() {
    using fairpeano::build_graph;
    std::vector<NamedGraph> out;
    out.push_back({"digon", build_graph(2, {{0, 1}, {0, 1}})});
    out.push_back({"triple_digon", build_graph(2, {{0, 1}, {0, 1}, {0, 1}})});
    out.push_back({"path2", build_graph(3, {{0, 1}, {1, 2}})});
    out.push_back({"triangle", build_graph(3, {{0, 1}, {0, 2}, {1, 2}})});
    out.push_back({"double_triangle", build_graph(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}})});
    out.push_back({"triangle_pendant", build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})});
    out.push_back({"k4", build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
    out.push_back({"k4_doubled",
                   build_graph(4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
    out.push_back(
        {"bowtie", build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})});
    out.push_back({"grid_2_2", fairpeano::build_grid_graph(2, 2)});
    out.push_back({"grid_2_3", fairpeano::build_grid_graph(2, 3)});
    out.push_back({"grid_3_3", fairpeano::build_grid_graph(3, 3)});
    out.push_back({"mg_1_1", fairpeano::build_modified_grid(1, 1).graph});
    out.push_back({"mg_1_2", fairpeano::build_modified_grid(1, 2).graph});
    out.push_back({"mg_2_2", fairpeano::build_modified_grid(2, 2).graph});
    out.push_back({"mg_2_3", fairpeano::build_modified_grid(2, 3).graph});
    return out;
}

// a second, non-unit weighting for each corpus graph
inline fairpeano::EdgeWeights mod3_weights(const fairpeano::Graph& g) {
    fairpeano::EdgeWeights w(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) w[e] = 1.0 + double(e % 3);
    return w;
}

inline std::string slurp_or_empty(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ProcResult {
    int exit_code = -1;
    std::string out, err;
};

// Run a shell command, capturing stdout/stderr into files under dir.
inline ProcResult run_process(const std::string& command, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const std::string out_path = dir + "/proc_out.txt";
    const std::string err_path = dir + "/proc_err.txt";
    const std::string full = command + " >'" + out_path + "' 2>'" + err_path + "'";
    const int status = std::system(full.c_str());
    ProcResult r;
    if (status == -1)
        r.exit_code = -1;
    else if (WIFEXITED(status))
        r.exit_code = WEXITSTATUS(status);
    else
        r.exit_code = 128;
    r.out = slurp_or_empty(out_path);
    r.err = slurp_or_empty(err_path);
    return r;
}

}  // namespace testsupport
