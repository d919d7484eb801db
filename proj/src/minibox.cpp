#include "boxph/minibox.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "boxph/kd_tree.hpp"
#include "boxph/priority_search_tree.hpp"
#include "boxph/staircase.hpp"
#include "parallel.hpp"

namespace boxph {

using detail::IndexPair;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dim(const PointCloud& cloud, std::size_t dim, std::string_view what) {
    if (cloud.size() > 0 && cloud.dim() != dim) {
        throw StrategyMismatch(std::string(what) + " requires dimension " + std::to_string(dim) +
                               ", got " + std::to_string(cloud.dim()));
    }
}

void require_distinct(const PointCloud& cloud, std::string_view what) {
    const auto bad = cloud.axes_with_shared_coordinates();
    if (!bad.empty()) {
        throw std::invalid_argument(std::string(what) + ": points share coordinates on axis " +
                                    std::to_string(bad.front()) + "; run preprocess() first");
    }
}

/// Direct dominance pairs (dominated, dominating) of 2D points given as
/// coordinate arrays. Sweeps in increasing x; a max segment tree over y-ranks
/// returns, for a query point, the rightmost earlier point in a y-range. The
/// chain of such points below the query is the staircase of its lower-left
/// quadrant, i.e. exactly the points it directly dominates.
std::vector<IndexPair> direct_dominance_2d(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    std::vector<std::uint32_t> by_x(n);
    std::vector<std::uint32_t> by_y(n);
    std::iota(by_x.begin(), by_x.end(), 0u);
    std::iota(by_y.begin(), by_y.end(), 0u);
    std::sort(by_x.begin(), by_x.end(), [&](std::uint32_t a, std::uint32_t b) {
        return xs[a] < xs[b] || (xs[a] == xs[b] && a < b);
    });
    std::sort(by_y.begin(), by_y.end(), [&](std::uint32_t a, std::uint32_t b) {
        return ys[a] < ys[b] || (ys[a] == ys[b] && a < b);
    });
    std::vector<std::uint32_t> y_rank(n);
    for (std::uint32_t r = 0; r < n; ++r) y_rank[by_y[r]] = r;
    std::vector<std::uint32_t> x_rank(n);
    for (std::uint32_t r = 0; r < n; ++r) x_rank[by_x[r]] = r;

    // iterative segment tree over y-ranks; leaves hold the point id, or -1
    std::size_t size = 1;
    while (size < n) size <<= 1;
    std::vector<std::int64_t> tree(2 * size, -1);
    auto better = [&](std::int64_t a, std::int64_t b) {
        if (a < 0) return b;
        if (b < 0) return a;
        return x_rank[a] > x_rank[b] ? a : b;
    };
    auto query = [&](std::size_t lo, std::size_t hi) {  // inclusive ranks
        std::int64_t best = -1;
        for (lo += size, hi += size + 1; lo < hi; lo >>= 1, hi >>= 1) {
            if (lo & 1) best = better(best, tree[lo++]);
            if (hi & 1) best = better(best, tree[--hi]);
        }
        return best;
    };

    std::vector<IndexPair> pairs;
    for (std::uint32_t q : by_x) {
        const std::uint32_t t = y_rank[q];
        std::int64_t floor_rank = -1;
        while (t > 0 && static_cast<std::int64_t>(t) - 1 > floor_rank) {
            const std::int64_t r = query(static_cast<std::size_t>(floor_rank + 1), t - 1);
            if (r < 0) break;
            pairs.emplace_back(static_cast<std::uint32_t>(r), q);
            floor_rank = y_rank[r];
        }
        std::size_t pos = t + size;
        tree[pos] = q;
        for (pos >>= 1; pos > 0; pos >>= 1) tree[pos] = better(tree[2 * pos], tree[2 * pos + 1]);
    }
    return pairs;
}

/// Open interval (a, b) as the closed double range it covers.
std::pair<double, double> open_range(double a, double b) {
    return {std::nextafter(a, kInf), std::nextafter(b, -kInf)};
}

Point3 lowest_in(const LayeredRangeTree& tree, const Rect& rect, double zmin) {
    const auto [x1, x2] = open_range(rect.x1, rect.x2);
    const auto [y1, y2] = open_range(rect.y1, rect.y2);
    return range_min_z(tree, {x1, x2, y1, y2}, std::nextafter(zmin, kInf));
}

PointCloud reflect_xy(const PointCloud& cloud, double sx, double sy) {
    std::vector<double> coords(cloud.data().begin(), cloud.data().end());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        coords[3 * i] *= sx;
        coords[3 * i + 1] *= sy;
    }
    return PointCloud(3, std::move(coords));
}

}  // namespace

std::string_view strategy_name(MiniboxStrategy s) {
    switch (s) {
        case MiniboxStrategy::Auto: return "auto";
        case MiniboxStrategy::BruteForce: return "brute";
        case MiniboxStrategy::Sweep2D: return "sweep2d";
        case MiniboxStrategy::Staircase3D: return "staircase3d";
        case MiniboxStrategy::PstRangeTree3D: return "pst3d";
        case MiniboxStrategy::RangeTreeHighD: return "rangetree";
        case MiniboxStrategy::KdTreeHighD: return "kdtree";
    }
    return "unknown";
}

std::optional<MiniboxStrategy> parse_strategy(std::string_view name) {
    for (auto s : {MiniboxStrategy::Auto, MiniboxStrategy::BruteForce, MiniboxStrategy::Sweep2D,
                   MiniboxStrategy::Staircase3D, MiniboxStrategy::PstRangeTree3D,
                   MiniboxStrategy::RangeTreeHighD, MiniboxStrategy::KdTreeHighD}) {
        if (strategy_name(s) == name) return s;
    }
    return std::nullopt;
}

MiniboxStrategy resolve_strategy(MiniboxStrategy s, std::size_t dim) {
    if (dim == 0) throw StrategyMismatch("cloud has dimension 0");
    if (s == MiniboxStrategy::Auto) {
        if (dim == 1) return MiniboxStrategy::BruteForce;
        if (dim == 2) return MiniboxStrategy::Sweep2D;
        if (dim == 3) return MiniboxStrategy::PstRangeTree3D;
        return MiniboxStrategy::RangeTreeHighD;
    }
    const auto fail = [&](std::string_view need) {
        throw StrategyMismatch("strategy " + std::string(strategy_name(s)) + " requires " +
                               std::string(need) + ", got dimension " + std::to_string(dim));
    };
    switch (s) {
        case MiniboxStrategy::Sweep2D:
            if (dim != 2) fail("dimension 2");
            break;
        case MiniboxStrategy::Staircase3D:
        case MiniboxStrategy::PstRangeTree3D:
            if (dim != 3) fail("dimension 3");
            break;
        case MiniboxStrategy::RangeTreeHighD:
        case MiniboxStrategy::KdTreeHighD:
            if (dim < 2) fail("dimension >= 2");
            break;
        default:
            break;
    }
    return s;
}

EdgeSet minibox_edges_brute(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dim();
    const double* x = cloud.data().data();
    auto pairs = detail::collect_pairs(n, [&](std::size_t i, std::vector<IndexPair>& out) {
        std::vector<double> lo(d);
        std::vector<double> hi(d);
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                lo[k] = std::min(x[i * d + k], x[j * d + k]);
                hi[k] = std::max(x[i * d + k], x[j * d + k]);
            }
            bool empty = true;
            for (std::size_t m = 0; m < n && empty; ++m) {
                bool inside = true;
                for (std::size_t k = 0; k < d && inside; ++k) {
                    const double c = x[m * d + k];
                    inside = lo[k] < c && c < hi[k];
                }
                empty = !inside;
            }
            if (empty) out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    });
    return EdgeSet::from_pairs(cloud, std::move(pairs));
}

EdgeSet minibox_edges_2d(const PointCloud& cloud) {
    require_dim(cloud, 2, "minibox_edges_2d");
    require_distinct(cloud, "minibox_edges_2d");
    const std::size_t n = cloud.size();
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = cloud.coord(i, 0);
        ys[i] = cloud.coord(i, 1);
    }
    std::vector<IndexPair> pairs = direct_dominance_2d(xs, ys);
    for (double& y : ys) y = -y;
    const std::vector<IndexPair> reflected = direct_dominance_2d(xs, ys);
    pairs.insert(pairs.end(), reflected.begin(), reflected.end());
    return EdgeSet::from_pairs(cloud, std::move(pairs));
}

EdgeSet minibox_edges_3d_staircase(const PointCloud& cloud) {
    require_dim(cloud, 3, "minibox_edges_3d_staircase");
    require_distinct(cloud, "minibox_edges_3d_staircase");
    const std::size_t n = cloud.size();
    std::vector<std::uint32_t> by_z(n);
    std::iota(by_z.begin(), by_z.end(), 0u);
    std::sort(by_z.begin(), by_z.end(), [&](std::uint32_t a, std::uint32_t b) {
        return cloud.coord(a, 2) < cloud.coord(b, 2);
    });

    auto pairs = detail::collect_pairs(n, [&](std::size_t i, std::vector<IndexPair>& out) {
        const std::uint32_t p = by_z[i];
        const double px = cloud.coord(p, 0);
        const double py = cloud.coord(p, 1);
        std::array<Staircase, 4> quadrants;
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint32_t q = by_z[j];
            const double dx = cloud.coord(q, 0) - px;
            const double dy = cloud.coord(q, 1) - py;
            const std::size_t quadrant = (dx > 0 ? 0 : 1) + (dy > 0 ? 0 : 2);
            if (quadrants[quadrant].insert({std::abs(dx), std::abs(dy)})) out.emplace_back(p, q);
        }
    });
    return EdgeSet::from_pairs(cloud, std::move(pairs));
}

std::vector<std::uint32_t> direct_dominators_3d(const LayeredRangeTree& tree,
                                                std::uint32_t anchor) {
    if (tree.dim() != 3) throw DimensionMismatch("direct_dominators_3d needs a 3D tree");
    const double px = tree.coord(anchor, 0);
    const double py = tree.coord(anchor, 1);
    const double pz = tree.coord(anchor, 2);
    const Rect quadrant{px, kInf, py, kInf};

    std::vector<std::uint32_t> partners;
    const Point3 first = lowest_in(tree, quadrant, pz);
    if (first.is_sentinel()) return partners;

    PrioritySearchTree pst(anchor);
    pst.insert({first, quadrant});
    while (!pst.top_marked()) {
        const PstPop pop = pst.pop_min();
        partners.push_back(static_cast<std::uint32_t>(pop.popped.point.id));
        const double qz = pop.popped.point.z;
        pst.insert({lowest_in(tree, pop.left, qz), pop.left});
        pst.insert({lowest_in(tree, pop.right, qz), pop.right});
    }
    return partners;
}

EdgeSet minibox_edges_3d_pst(const PointCloud& cloud) {
    require_dim(cloud, 3, "minibox_edges_3d_pst");
    require_distinct(cloud, "minibox_edges_3d_pst");
    const std::size_t n = cloud.size();
    std::vector<IndexPair> pairs;
    constexpr std::array<std::pair<double, double>, 4> kReflections{
        {{1.0, 1.0}, {-1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}}};
    for (const auto& [sx, sy] : kReflections) {
        const LayeredRangeTree tree(reflect_xy(cloud, sx, sy));
        auto found = detail::collect_pairs(n, [&](std::size_t i, std::vector<IndexPair>& out) {
            const auto p = static_cast<std::uint32_t>(i);
            for (std::uint32_t q : direct_dominators_3d(tree, p)) out.emplace_back(p, q);
        });
        pairs.insert(pairs.end(), found.begin(), found.end());
    }
    return EdgeSet::from_pairs(cloud, std::move(pairs));
}

EdgeSet minibox_edges_highd(const PointCloud& cloud, MiniboxStrategy strategy) {
    if (strategy != MiniboxStrategy::RangeTreeHighD && strategy != MiniboxStrategy::KdTreeHighD) {
        throw StrategyMismatch("minibox_edges_highd takes rangetree or kdtree");
    }
    if (cloud.size() > 0 && cloud.dim() < 2) throw StrategyMismatch("high-d strategies need d >= 2");
    require_distinct(cloud, "minibox_edges_highd");
    const std::size_t n = cloud.size();

    auto run = [&](const auto& tree) {
        return detail::collect_pairs(n, [&](std::size_t i, std::vector<IndexPair>& out) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (tree.range_empty(minibox(cloud[i], cloud[j]))) {
                    out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
                }
            }
        });
    };
    std::vector<IndexPair> pairs;
    if (strategy == MiniboxStrategy::RangeTreeHighD) {
        pairs = run(LayeredRangeTree(cloud));
    } else {
        pairs = run(KdTree(cloud));
    }
    return EdgeSet::from_pairs(cloud, std::move(pairs));
}

EdgeSet minibox_edges(const PointCloud& cloud, MiniboxStrategy strategy) {
    if (cloud.size() < 2) return {};
    strategy = resolve_strategy(strategy, cloud.dim());
    switch (strategy) {
        case MiniboxStrategy::BruteForce: return minibox_edges_brute(cloud);
        case MiniboxStrategy::Sweep2D: return minibox_edges_2d(cloud);
        case MiniboxStrategy::Staircase3D: return minibox_edges_3d_staircase(cloud);
        case MiniboxStrategy::PstRangeTree3D: return minibox_edges_3d_pst(cloud);
        case MiniboxStrategy::RangeTreeHighD:
        case MiniboxStrategy::KdTreeHighD: return minibox_edges_highd(cloud, strategy);
        case MiniboxStrategy::Auto: break;
    }
    throw StrategyMismatch("unresolved strategy");
}

EdgeSet direct_dominance_pairs(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n < 2) return {};
    require_distinct(cloud, "direct_dominance_pairs");
    const std::size_t d = cloud.dim();
    if (d == 2) {
        std::vector<double> xs(n);
        std::vector<double> ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = cloud.coord(i, 0);
            ys[i] = cloud.coord(i, 1);
        }
        return EdgeSet::from_pairs(cloud, direct_dominance_2d(xs, ys));
    }
    if (d == 3) {
        const LayeredRangeTree tree(cloud);
        auto pairs = detail::collect_pairs(n, [&](std::size_t i, std::vector<IndexPair>& out) {
            const auto p = static_cast<std::uint32_t>(i);
            for (std::uint32_t q : direct_dominators_3d(tree, p)) out.emplace_back(p, q);
        });
        return EdgeSet::from_pairs(cloud, std::move(pairs));
    }
    // other dimensions: comparable pairs with an empty open box
    auto dominated = [&](std::size_t a, std::size_t b) {
        for (std::size_t k = 0; k < d; ++k) {
            if (!(cloud.coord(a, k) < cloud.coord(b, k))) return false;
        }
        return true;
    };
    std::vector<IndexPair> pairs;
    if (d == 1) {
        for (const Edge& e : minibox_edges_brute(cloud)) pairs.emplace_back(e.u, e.v);
    } else {
        const LayeredRangeTree tree(cloud);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if ((dominated(i, j) || dominated(j, i)) &&
                    tree.range_empty(minibox(cloud[i], cloud[j]))) {
                    pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
                }
            }
        }
    }
    return EdgeSet::from_pairs(cloud, std::move(pairs));
}

}  // namespace boxph
