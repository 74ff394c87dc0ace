#pragma once

#include "fairpeano/graph.hpp"

namespace fairpeano {

// Plain rectangular grid on cols*rows vertices, vertex (i,j) at index
// j*cols + i. Edge order: scan vertices in index order, right edge before up
// edge at each vertex.
inline Graph build_grid_graph(int cols, int rows) {
    if (cols < 1 || rows < 1) throw InputError("grid dimensions must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
            const int v = j * cols + i;
            if (i + 1 < cols) edges.emplace_back(v, v + 1);
            if (j + 1 < rows) edges.emplace_back(v, v + cols);
        }
    return build_graph(cols * rows, edges);
}

}  // namespace fairpeano
