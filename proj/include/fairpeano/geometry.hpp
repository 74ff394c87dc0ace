#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <unordered_map>
#include <vector>

#include "fairpeano/errors.hpp"

namespace fairpeano {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

inline double dist_linf(const Point& a, const Point& b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

// Proper crossing test for open segments; used to certify that the dual tree
// never crosses the primal tree. Collinear overlap counts as a crossing,
// shared endpoints do not.
inline bool segments_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    auto orient = [](const Point& a, const Point& b, const Point& c) {
        const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        if (v > 1e-15) return 1;
        if (v < -1e-15) return -1;
        return 0;
    };
    const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        auto overlap1 = [](double a, double b, double c, double d) {
            if (a > b) std::swap(a, b);
            if (c > d) std::swap(c, d);
            return std::max(a, c) < std::min(b, d) - 1e-15;
        };
        return overlap1(p1.x, p2.x, q1.x, q2.x) || overlap1(p1.y, p2.y, q1.y, q2.y);
    }
    return o1 * o2 < 0 && o3 * o4 < 0;
}

inline double point_segment_dist(const Point& p, const Point& a, const Point& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
    return dist(p, Point{a.x + t * vx, a.y + t * vy});
}

// Uniform-grid index over a point set. Nearest-neighbor queries expand in
// square rings around the query cell and stop once the ring's lower distance
// bound exceeds the best squared distance found, which is near O(1) per
// query for lattice-scale spacing.
class PointBuckets {
  public:
    PointBuckets(const std::vector<Point>& pts, double cell) : pts_(pts), cell_(cell) {
        if (pts.empty()) throw InputError("point index over empty set");
        if (!(cell > 0.0)) throw InputError("point index needs positive cell size");
        buckets_.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const long long gx = cx(pts[i].x), gy = cx(pts[i].y);
            lo_x_ = std::min(lo_x_, gx), hi_x_ = std::max(hi_x_, gx);
            lo_y_ = std::min(lo_y_, gy), hi_y_ = std::max(hi_y_, gy);
            buckets_[key(gx, gy)].push_back((int)i);
        }
    }

    double nearest_dist2(const Point& q) const {
        const long long bx = cx(q.x), by = cx(q.y);
        // after this many rings every occupied cell has been scanned
        const long long rmax =
            std::max({bx - lo_x_, hi_x_ - bx, by - lo_y_, hi_y_ - by, 0LL});
        double best = std::numeric_limits<double>::infinity();
        for (long long r = 0; r <= rmax; ++r) {
            const double ring_lb = double(r - 1) * cell_;  // nothing in ring r is closer
            if (ring_lb > 0.0 && ring_lb * ring_lb >= best) break;
            for (long long dx = -r; dx <= r; ++dx) {
                for (long long dy = -r; dy <= r; ++dy) {
                    if (std::max(std::abs(dx), std::abs(dy)) != r) continue;
                    const auto it = buckets_.find(key(bx + dx, by + dy));
                    if (it == buckets_.end()) continue;
                    for (const int i : it->second) best = std::min(best, dist2(pts_[i], q));
                }
            }
        }
        return best;
    }

    double nearest_dist(const Point& q) const { return std::sqrt(nearest_dist2(q)); }

  private:
    static std::uint64_t key(long long x, long long y) {
        return (std::uint64_t)(x + (1LL << 30)) << 32 | (std::uint64_t)(y + (1LL << 30));
    }
    long long cx(double v) const { return (long long)std::floor(v / cell_); }

    const std::vector<Point>& pts_;
    double cell_;
    long long lo_x_ = 1LL << 30, hi_x_ = -(1LL << 30);
    long long lo_y_ = 1LL << 30, hi_y_ = -(1LL << 30);
    std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

inline double one_sided_hausdorff(const std::vector<Point>& from, const std::vector<Point>& to,
                                  double cell) {
    PointBuckets index(to, cell);
    double worst = 0.0;
    for (const Point& p : from) worst = std::max(worst, index.nearest_dist2(p));
    return std::sqrt(worst);
}

inline double hausdorff_distance(const std::vector<Point>& a, const std::vector<Point>& b,
                                 double cell = 0.0) {
    if (a.empty() || b.empty()) throw InputError("hausdorff_distance needs nonempty point sets");
    if (cell <= 0.0) {
        // heuristic cell: aim for O(1) points per bucket on lattice-like input
        cell = 1.0 / std::max(4.0, std::sqrt(double(std::max(a.size(), b.size()))));
    }
    return std::max(one_sided_hausdorff(a, b, cell), one_sided_hausdorff(b, a, cell));
}

// Small-input reference used by tests to validate the bucketed version.
inline double hausdorff_bruteforce(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty()) throw InputError("hausdorff_distance needs nonempty point sets");
    auto side = [](const std::vector<Point>& from, const std::vector<Point>& to) {
        double worst = 0.0;
        for (const Point& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& q : to) best = std::min(best, dist2(p, q));
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(side(a, b), side(b, a));
}

}  // namespace fairpeano
