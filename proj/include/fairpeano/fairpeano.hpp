#pragma once

// Everything at once. Individual headers are cheap to include on their own;
// this is for tools and quick experiments.

#include "fairpeano/branches.hpp"
#include "fairpeano/classify.hpp"
#include "fairpeano/deflation.hpp"
#include "fairpeano/density.hpp"
#include "fairpeano/dual_tree.hpp"
#include "fairpeano/enumerate.hpp"
#include "fairpeano/errors.hpp"
#include "fairpeano/experiments.hpp"
#include "fairpeano/fair_trees.hpp"
#include "fairpeano/feu.hpp"
#include "fairpeano/fileio.hpp"
#include "fairpeano/geometry.hpp"
#include "fairpeano/graph.hpp"
#include "fairpeano/graph_io.hpp"
#include "fairpeano/grid.hpp"
#include "fairpeano/kirchhoff.hpp"
#include "fairpeano/modified_grid.hpp"
#include "fairpeano/peano.hpp"
#include "fairpeano/rational.hpp"
#include "fairpeano/rng.hpp"
#include "fairpeano/spanning_tree.hpp"
#include "fairpeano/square_lattice.hpp"
#include "fairpeano/svg.hpp"
#include "fairpeano/tree_pmf.hpp"
#include "fairpeano/uniformize.hpp"
#include "fairpeano/wust.hpp"
