#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "boxph/geometry.hpp"
#include "boxph/range_tree.hpp"

namespace boxph {

/// Algorithms for enumerating Minibox edges: pairs {p, q} whose open
/// bounding box contains no other point of the cloud.
enum class MiniboxStrategy {
    Auto,
    BruteForce,
    Sweep2D,
    Staircase3D,
    PstRangeTree3D,
    RangeTreeHighD,
    KdTreeHighD,
};

/// Thrown when a strategy is asked to run on a cloud it cannot handle.
class StrategyMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string_view strategy_name(MiniboxStrategy s);
std::optional<MiniboxStrategy> parse_strategy(std::string_view name);

/// Replaces Auto with the dimension default (2: Sweep2D, 3: PstRangeTree3D,
/// >= 4: RangeTreeHighD, 1: BruteForce) and checks dimension requirements.
MiniboxStrategy resolve_strategy(MiniboxStrategy s, std::size_t dim);

/// Reference O(d n^3) scan. Works on any cloud; a box that is empty because
/// two points share a coordinate counts as an edge.
EdgeSet minibox_edges_brute(const PointCloud& cloud);

/// d = 2: direct-dominance staircase sweep on the cloud and on its
/// reflection y -> -y.
EdgeSet minibox_edges_2d(const PointCloud& cloud);

/// d = 3, O(n^2 log n) time and O(n) space: for each anchor a z-sweep over
/// the points above it, with one staircase per quadrant of the sweep plane.
EdgeSet minibox_edges_3d_staircase(const PointCloud& cloud);

/// d = 3: direct dominance pairs via a priority search tree fed by min-z
/// range-tree queries, run on the four xy reflections of the cloud.
EdgeSet minibox_edges_3d_pst(const PointCloud& cloud);

/// Any d >= 2: tests every pair with an orthogonal range-emptiness query on
/// a layered range tree (RangeTreeHighD) or kd-tree (KdTreeHighD).
EdgeSet minibox_edges_highd(const PointCloud& cloud, MiniboxStrategy strategy);

/// Dispatches on the (resolved) strategy. Fast strategies require distinct
/// coordinates per axis (see preprocess()).
EdgeSet minibox_edges(const PointCloud& cloud, MiniboxStrategy strategy = MiniboxStrategy::Auto);

/// Pairs (p, q) where p dominates q and no third point lies between them,
/// reported as canonical edges.
EdgeSet direct_dominance_pairs(const PointCloud& cloud);

/// Points of a 3D tree that directly dominate `anchor`, in the order the
/// priority-search-tree sweep reports them (increasing z).
std::vector<std::uint32_t> direct_dominators_3d(const LayeredRangeTree& tree,
                                                std::uint32_t anchor);

}  // namespace boxph
