#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boxph/geometry.hpp"
#include "boxph/priority_search_tree.hpp"

namespace boxph {

/// Static d-dimensional range tree (d >= 2). Axes 0..d-3 are ordinary
/// nested range-tree levels; the last two axes form a layered level whose
/// nodes hold point arrays sorted on the last axis, linked to their
/// children's arrays by fractional-cascading pointers.
///
/// The natural query is "point with the smallest last coordinate inside a
/// closed box", which answers both min-z queries (d = 3) and orthogonal range
/// emptiness. Query cost is O(log^{d-1} n), storage O(n log^{d-1} n).
class LayeredRangeTree {
public:
    explicit LayeredRangeTree(const PointCloud& cloud);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return n_; }

    /// Index of the point minimizing the last coordinate (ties: smaller
    /// index) inside the closed box [lo, hi], or nullopt if the box is empty.
    std::optional<std::uint32_t> min_last_in(std::span<const double> lo,
                                             std::span<const double> hi) const;

    /// True iff no stored point lies in `box` (open endpoints are honoured).
    bool range_empty(const Box& box) const;

    /// Total number of stored array entries over all levels.
    std::size_t storage() const;

    double coord(std::uint32_t i, std::size_t axis) const { return coords_[i * dim_ + axis]; }

private:
    struct Segment {
        std::uint32_t begin = 0;
        std::uint32_t end = 0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::uint32_t child = 0;
    };
    struct Level {
        std::uint32_t axis = 0;
        std::vector<double> keys;
        std::vector<Segment> nodes;
    };
    struct CascadeNode {
        std::uint32_t begin = 0;
        std::uint32_t end = 0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::uint32_t offset = 0;  // into ids/last
        std::uint32_t length = 0;
        std::uint32_t ptr_offset = 0;  // into left_ptr/right_ptr, length + 1 slots
    };
    struct Cascade {
        std::vector<double> keys;
        std::vector<CascadeNode> nodes;
        std::vector<std::uint32_t> ids;
        std::vector<double> last;
        std::vector<std::uint32_t> left_ptr;
        std::vector<std::uint32_t> right_ptr;
    };
    struct Best {
        double value;
        std::uint32_t id;
        bool found = false;
    };

    std::uint32_t build_level(std::vector<std::uint32_t> ids, std::uint32_t axis);
    std::int32_t build_level_node(std::uint32_t level, const std::vector<std::uint32_t>& sorted,
                                  std::uint32_t begin, std::uint32_t end);
    std::uint32_t build_cascade(std::vector<std::uint32_t> ids);
    std::int32_t build_cascade_node(Cascade& c, const std::vector<std::uint32_t>& sorted,
                                    std::uint32_t begin, std::uint32_t end);

    void query_level(std::uint32_t level, std::span<const double> lo, std::span<const double> hi,
                     Best& best) const;
    void query_cascade(std::uint32_t cascade, std::span<const double> lo,
                       std::span<const double> hi, Best& best) const;

    std::size_t dim_ = 0;
    std::size_t n_ = 0;
    std::vector<double> coords_;
    std::vector<Level> levels_;
    std::vector<Cascade> cascades_;
    std::uint32_t root_ = 0;
};

/// Lowest point in [xy.x1, xy.x2] x [xy.y1, xy.y2] x [zmin, +inf) of a 3D tree,
/// or Point3::sentinel() if that range is empty.
Point3 range_min_z(const LayeredRangeTree& tree, const Rect& xy, double zmin);

/// Closed bounds equivalent to `box` on doubles: open endpoints are moved one
/// representable value inwards.
void closed_bounds(const Box& box, std::vector<double>& lo, std::vector<double>& hi);

}  // namespace boxph
