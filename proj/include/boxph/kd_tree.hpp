#pragma once

#include <cstdint>
#include <vector>

#include "boxph/geometry.hpp"

namespace boxph {

/// Static kd-tree splitting on axes in round-robin order. Each node keeps the
/// bounding box of its points so range queries can prune or accept whole
/// subtrees; leaves hold up to `leaf_size` points.
class KdTree {
public:
    explicit KdTree(const PointCloud& cloud, std::size_t leaf_size = 8);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return order_.size(); }

    /// True iff no stored point lies in `box` (open endpoints honoured).
    bool range_empty(const Box& box) const;

    /// Point indices of each leaf, in tree order. Every point appears in
    /// exactly one leaf.
    std::vector<std::vector<std::uint32_t>> leaves() const;

private:
    struct Node {
        std::uint32_t begin = 0;
        std::uint32_t end = 0;
        std::int32_t left = -1;
        std::int32_t right = -1;
    };

    std::int32_t build(std::uint32_t begin, std::uint32_t end, std::size_t depth);
    double coord(std::uint32_t i, std::size_t axis) const { return coords_[i * dim_ + axis]; }

    std::size_t dim_ = 0;
    std::size_t leaf_size_ = 8;
    std::vector<double> coords_;
    std::vector<std::uint32_t> order_;
    std::vector<Node> nodes_;
    std::vector<double> bbox_lo_;  // dim_ values per node
    std::vector<double> bbox_hi_;
};

}  // namespace boxph
