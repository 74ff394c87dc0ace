#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fairpeano/dual_tree.hpp"
#include "fairpeano/square_lattice.hpp"

namespace fairpeano {

// Space-filling path between a fair tree and its dual. The interior points
// live on the fine lattice ((2a+1)/(4n), (2b+1)/(4n)), a,b in 0..2n-1; the
// first and last points are the exact corners 0 and 1+i.
struct LatticeCurve {
    int n = 0;
    std::vector<Point> points;
};

namespace detail {

// Wall model for the fine walk. A +x move from fine point (a,b) crosses the
// vertical line x=c/(4n) with c=2(a+1); even c/2 means a primal column,
// odd means a dual column. Whether a wall is there reduces to one tree
// membership bit. The chooses array holds, per interior node, 1 if the
// node's right edge is in the tree.
struct FineWalls {
    int n;
    const SquareLattice* lat;
    std::vector<char> right;  // per interior node

    bool tree_right(int i, int j) const { return right[lat->grid.node_index(i, j)] != 0; }
    // vertical primal segment from (i/n, jseg/n) up to (i/n, (jseg+1)/n):
    // drawn iff it is the chosen down edge of node (i, jseg+1)
    bool down_drawn(int i, int jtop) const { return !tree_right(i, jtop); }

    bool dual_vert(int k, int l) const {  // dual edge (k,l)-(k,l+1)
        if (k == 0) return true;
        return !tree_right(k, l + 1);
    }
    bool dual_hor(int k, int l) const {  // dual edge (k,l)-(k+1,l)
        if (l == n - 1) return true;
        return tree_right(k + 1, l + 1);
    }

    bool blocked_x(int a, int b) const {  // move (a,b) -> (a+1,b)
        const int c = a + 1;
        if (c % 2 == 0) {
            const int i = c / 2;
            const int jseg = b / 2;
            if (jseg + 1 <= n - 1) return down_drawn(i, jseg + 1);
            return false;  // strip above the top interior row
        }
        if (b == 0) return false;  // below the lowest dual row
        const int k = (c - 1) / 2;
        const int l = (b - 1) / 2;
        if (l + 1 <= n - 1) return dual_vert(k, l);
        return false;
    }
    bool blocked_y(int a, int b) const {  // move (a,b) -> (a,b+1)
        const int c = b + 1;
        if (c % 2 == 0) {
            const int j = c / 2;
            const int iseg = a / 2;
            if (iseg >= 1) return tree_right(iseg, j);
            return false;  // strip left of the leftmost column
        }
        if (a == 0) return false;
        const int l = (c - 1) / 2;
        const int k = (a - 1) / 2;
        if (k + 1 <= n - 1) return dual_hor(k, l);
        return false;
    }
};

}  // namespace detail

// Walk the fine lattice without crossing the tree or its dual. Counting
// walls shows every fine point has exactly two open moves, so the open
// moves form disjoint cycles; in every observed case they form one cycle
// through all 4n^2 points. The curve is that cycle cut at the edge between
// fine(0,0) and fine(0,1), traversed bottom strip first, with the exact
// corners affixed. The Hamiltonian property is certified here rather than
// assumed; a violation would mean the wall model is wrong for this tree.
inline LatticeCurve peano_curve(const SquareLattice& lat, const SpanningTree& t) {
    if (!is_fair_tree(lat.grid, t))
        throw InputError("peano curve construction needs a fair tree");
    const int n = lat.n;
    const int side = 2 * n;
    detail::FineWalls walls{n, &lat, std::vector<char>(lat.grid.node_count(), 0)};
    for (int v = 0; v < lat.grid.node_count(); ++v)
        walls.right[v] = tree_contains(t, lat.grid.right_edge(v)) ? 1 : 0;

    LatticeCurve curve;
    curve.n = n;
    curve.points.reserve(std::size_t(side) * side + 2);
    curve.points.push_back(Point{0.0, 0.0});

    const double u = 1.0 / (4.0 * n);
    auto fine = [u](int a, int b) { return Point{(2 * a + 1) * u, (2 * b + 1) * u}; };
    std::vector<char> visited(std::size_t(side) * side, 0);

    int a = 0, b = 0, pa = -1, pb = -1;
    std::size_t count = 0;
    for (;;) {
        curve.points.push_back(fine(a, b));
        visited[std::size_t(b) * side + a] = 1;
        ++count;
        int na = -1, nb = -1, open = 0;
        auto consider = [&](int xa, int xb) {
            if (xa == pa && xb == pb) return;
            ++open;
            na = xa;
            nb = xb;
        };
        if (count == 1) {
            // forced orientation: leave the start toward (1,0)
            if (walls.blocked_x(0, 0))
                throw std::runtime_error("peano walk: first move blocked");
            consider(1, 0);
        } else {
            if (a + 1 < side && !walls.blocked_x(a, b)) consider(a + 1, b);
            if (a - 1 >= 0 && !walls.blocked_x(a - 1, b)) consider(a - 1, b);
            if (b + 1 < side && !walls.blocked_y(a, b)) consider(a, b + 1);
            if (b - 1 >= 0 && !walls.blocked_y(a, b - 1)) consider(a, b - 1);
            if (open != 1)
                throw std::runtime_error("peano walk: fine point degree is not 2");
        }
        if (na == 0 && nb == 0) break;  // cycle closed
        if (visited[std::size_t(nb) * side + na])
            throw std::runtime_error("peano walk: closed early, not Hamiltonian");
        pa = a;
        pb = b;
        a = na;
        b = nb;
    }
    if (count != std::size_t(side) * side)
        throw std::runtime_error("peano walk: cycle missed fine points");
    if (a != 0 || b != 1)
        throw std::runtime_error("peano walk: unexpected final fine point");
    curve.points.push_back(Point{1.0, 1.0});
    return curve;
}

// First index whose point has left {x+y <= b}; curve length when none does.
// The epsilon absorbs decimal b values that cannot represent the rational
// fine coordinates exactly.
inline std::size_t stopping_index(const LatticeCurve& c, double b) {
    if (b < 0.0 || b > 2.0) throw InputError("stopping_index needs b in [0,2]");
    for (std::size_t i = 0; i < c.points.size(); ++i)
        if (c.points[i].x + c.points[i].y > b + 1e-12) return i;
    return c.points.size();
}

// Triangular region {x+y <= b} of the closed unit square, with the grid
// resolution used to discretize it for coverage measurements.
struct Region {
    double b = 2.0;
    double resolution = 0.0;
};

// One-sided Hausdorff defect: how far the worst point of Q_b is from the
// curve prefix (the prefix never leaves Q_b, so the other side is zero).
inline double coverage_radius(const LatticeCurve& c, std::size_t prefix_end, const Region& r) {
    if (r.b < 0.0 || r.b > 2.0) throw InputError("coverage region needs b in [0,2]");
    if (r.resolution <= 0.0) throw InputError("coverage region needs a positive resolution");
    if (prefix_end == 0 || prefix_end > c.points.size())
        throw InputError("coverage prefix must be a nonempty curve prefix");
    const std::vector<Point> prefix(c.points.begin(), c.points.begin() + prefix_end);
    PointBuckets index(prefix, r.resolution);
    const int steps = int(std::floor(1.0 / r.resolution + 1e-9));
    double worst = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double x = std::min(1.0, i * r.resolution);
        for (int j = 0; j <= steps; ++j) {
            const double y = std::min(1.0, j * r.resolution);
            if (x + y > r.b + 1e-12) break;  // rows are scanned in increasing y
            worst = std::max(worst, std::sqrt(index.nearest_dist2(Point{x, y})));
        }
    }
    return worst;
}

// Max over primal vertices of the L-inf distance to the nearest curve
// point. Hamiltonicity forces this to be exactly 1/(4n): the four fine
// points diagonal to a vertex are all visited and nothing sits closer.
inline double vertex_clearance(const SquareLattice& lat, const LatticeCurve& c) {
    double worst = 0.0;
    for (int i = 1; i <= lat.n; ++i)
        for (int j = 0; j <= lat.n - 1; ++j) {
            const Point p = lat.primal_position(i, j);
            double best = std::numeric_limits<double>::infinity();
            for (const Point& q : c.points) best = std::min(best, dist_linf(p, q));
            worst = std::max(worst, best);
        }
    return worst;
}

}  // namespace fairpeano
