#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairpeano/classify.hpp"
#include "fairpeano/deflation.hpp"
#include "fairpeano/fileio.hpp"
#include "fairpeano/kirchhoff.hpp"
#include "fairpeano/spanning_tree.hpp"
#include "fairpeano/uniformize.hpp"

namespace fairpeano {

struct LoadedGraph {
    Graph graph;
    EdgeWeights weights;  // unit weights when the file has none
    bool has_weights = false;
};

namespace detail {

inline nlohmann::json parse_json_file(const std::string& path, const char* what) {
    const std::string text = read_file_text(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string(what) + " " + path + ": " + e.what());
    }
}

}  // namespace detail

// Graph files: {"vertex_count": V, "edges": [[a,b],...], "weights": [...]?}.
inline LoadedGraph load_graph_file(const std::string& path) {
    const nlohmann::json j = detail::parse_json_file(path, "graph file");
    const std::string where = "graph file " + path;
    if (!j.is_object()) throw InputError(where + ": top level must be an object");
    if (!j.contains("vertex_count") || !j["vertex_count"].is_number_integer())
        throw InputError(where + ": missing integer field \"vertex_count\"");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError(where + ": missing array field \"edges\"");
    const long long vc = j["vertex_count"].get<long long>();
    if (vc < 1) throw InputError(where + ": \"vertex_count\" must be positive");

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& e = j["edges"][i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError(where + ": \"edges\"[" + std::to_string(i) +
                             "] must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    LoadedGraph out{build_graph((int)vc, edges), {}, false};
    if (j.contains("weights")) {
        if (!j["weights"].is_array() || j["weights"].size() != edges.size())
            throw InputError(where + ": \"weights\" must be an array matching \"edges\" in length");
        for (std::size_t i = 0; i < j["weights"].size(); ++i) {
            const auto& w = j["weights"][i];
            if (!w.is_number())
                throw InputError(where + ": \"weights\"[" + std::to_string(i) +
                                 "] must be a number");
            out.weights.push_back(w.get<double>());
        }
        check_weights(out.graph, out.weights);
        out.has_weights = true;
    } else {
        out.weights = unit_weights(out.graph);
    }
    return out;
}

// Standalone weights files reuse the same key: {"weights": [...]}, or a
// bare array for convenience.
inline EdgeWeights load_weights_file(const std::string& path, const Graph& g) {
    const nlohmann::json j = detail::parse_json_file(path, "weights file");
    const std::string where = "weights file " + path;
    const nlohmann::json* arr = nullptr;
    if (j.is_array()) arr = &j;
    else if (j.is_object() && j.contains("weights") && j["weights"].is_array())
        arr = &j["weights"];
    else
        throw InputError(where + ": expected an array or an object with \"weights\"");
    if ((int)arr->size() != g.edge_count())
        throw InputError(where + ": \"weights\" length " + std::to_string(arr->size()) +
                         " does not match edge count " + std::to_string(g.edge_count()));
    EdgeWeights w;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        if (!(*arr)[i].is_number())
            throw InputError(where + ": \"weights\"[" + std::to_string(i) + "] must be a number");
        w.push_back((*arr)[i].get<double>());
    }
    check_weights(g, w);
    return w;
}

// Tree files carry their ambient grid: {"format":1, "n":N, "edges":[...]}
// for a square-lattice tree, or {"format":1, "grid":[m,n], "edges":[...]}.
struct TreeFile {
    std::optional<int> n;
    std::optional<std::pair<int, int>> grid;
    SpanningTree tree;
};

inline std::string tree_file_text(const TreeFile& tf) {
    nlohmann::json j;
    j["format"] = 1;
    if (tf.n) j["n"] = *tf.n;
    if (tf.grid) j["grid"] = {tf.grid->first, tf.grid->second};
    j["edges"] = tf.tree.edge_set;
    return j.dump(2) + "\n";
}

inline void save_tree_file(const std::string& path, const TreeFile& tf) {
    write_text_atomic(path, tree_file_text(tf));
}

inline TreeFile load_tree_file(const std::string& path) {
    const nlohmann::json j = detail::parse_json_file(path, "tree file");
    const std::string where = "tree file " + path;
    if (!j.is_object()) throw InputError(where + ": top level must be an object");
    if (!j.contains("format") || j["format"] != 1)
        throw InputError(where + ": missing or unsupported \"format\" (expected 1)");
    TreeFile tf;
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw InputError(where + ": \"n\" must be an integer");
        tf.n = j["n"].get<int>();
    }
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() ||
            !g[1].is_number_integer())
            throw InputError(where + ": \"grid\" must be [m,n]");
        tf.grid = std::make_pair(g[0].get<int>(), g[1].get<int>());
    }
    if (tf.n.has_value() == tf.grid.has_value())
        throw InputError(where + ": exactly one of \"n\" or \"grid\" is required");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError(where + ": missing array field \"edges\"");
    std::vector<int> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        if (!j["edges"][i].is_number_integer())
            throw InputError(where + ": \"edges\"[" + std::to_string(i) +
                             "] must be an integer edge index");
        edges.push_back(j["edges"][i].get<int>());
    }
    tf.tree = make_tree(std::move(edges));
    return tf;
}

// CLI-facing serializations. nlohmann/json keeps object keys sorted, so
// every dump below is byte-deterministic for identical values.
inline std::string edge_vector_json(const std::vector<double>& v, const char* key) {
    nlohmann::json j;
    j[key] = v;
    return j.dump(2) + "\n";
}

inline std::string feu_solution_json(const FeuSolution& sol) {
    nlohmann::json j;
    j["eta"] = sol.eta;
    j["variance"] = sol.variance;
    j["converged"] = sol.converged;
    j["iterations"] = sol.iterations;
    j["gap"] = sol.gap;
    j["homogeneous"] = sol.homogeneous;
    return j.dump(2) + "\n";
}

inline const char* classification_label(const Classification& c) {
    if (c.strictly_1_dense) return "strictly_1_dense";
    return c.homogeneous ? "homogeneous_not_strict" : "inhomogeneous";
}

inline std::string classification_json(const Classification& c) {
    nlohmann::json j;
    j["label"] = classification_label(c);
    j["theta"] = c.density.theta.str();
    j["theta_value"] = c.density.theta.value();
    j["max_theta"] = c.scan.theta_max.str();
    j["strictly_1_dense"] = c.strictly_1_dense;
    j["homogeneous"] = c.homogeneous;
    j["eta"] = c.feu.eta;
    j["variance"] = c.feu.variance;
    return j.dump(2) + "\n";
}

inline std::string deflation_json(const DeflationSequence& seq) {
    nlohmann::json j;
    j["stage_count"] = seq.stages.size();
    j["completed"] = seq.completed;
    j["terminal_vertex_count"] = seq.terminal.vertex_count;
    nlohmann::json stages = nlohmann::json::array();
    for (const DeflationStage& st : seq.stages) {
        nlohmann::json s;
        s["core_vertices"] = st.core_vertices;
        s["core_theta"] = st.core_density.theta.str();
        s["quotient_vertex_count"] = st.quotient.graph.vertex_count;
        s["quotient_edge_count"] = st.quotient.graph.edge_count();
        stages.push_back(std::move(s));
    }
    j["stages"] = std::move(stages);
    return j.dump(2) + "\n";
}

inline std::string uniformize_json(const UniformizeResult& res) {
    nlohmann::json j;
    j["weights"] = res.weights;
    j["residual"] = res.residual;
    j["iterations"] = res.iterations;
    return j.dump(2) + "\n";
}

}  // namespace fairpeano
