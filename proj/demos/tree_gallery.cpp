// Samples one fair tree, draws it three ways, and prints where the files
// went. A quick visual check that the dual tree threads between the primal
// branches and the curve squeezes through both.

#include <cstdio>
#include <string>

#include "fairpeano/fairpeano.hpp"

using namespace fairpeano;

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 12;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
    if (n < 2) {
        std::fprintf(stderr, "usage: tree_gallery [n >= 2] [seed]\n");
        return 1;
    }

    const SquareLattice lat = build_square_lattice(n);
    RandomStream rng(derive_seed(seed));
    const SpanningTree tree = sample_fair_tree(lat.grid, rng);
    const DualTree dual = dual_tree(lat, tree);
    const LatticeCurve curve = peano_curve(lat, tree);

    RenderScene scene;
    scene.lattice = &lat;
    scene.tree = &tree;
    write_text_atomic("gallery_tree.svg", render_svg(scene));

    scene.dual = &dual;
    scene.color_mode = ColorMode::closest_boundary_vertex;
    write_text_atomic("gallery_dual.svg", render_svg(scene));

    scene.curve = &curve;
    write_text_atomic("gallery_curve.svg", render_svg(scene));

    std::printf("n=%d seed=%llu: %d tree edges, curve of %zu points, clearance %.6f\n", n,
                (unsigned long long)seed, (int)tree.edge_set.size(), curve.points.size(),
                vertex_clearance(lat, curve));
    std::printf("wrote gallery_tree.svg, gallery_dual.svg, gallery_curve.svg\n");
    return 0;
}
