#include "boxph/kd_tree.hpp"

#include <algorithm>
#include <limits>

namespace boxph {

KdTree::KdTree(const PointCloud& cloud, std::size_t leaf_size)
    : dim_(cloud.dim()),
      leaf_size_(std::max<std::size_t>(1, leaf_size)),
      coords_(cloud.data().begin(), cloud.data().end()),
      order_(cloud.size()) {
    for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
    if (!order_.empty()) build(0, static_cast<std::uint32_t>(order_.size()), 0);
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end, std::size_t depth) {
    const auto index = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({begin, end, -1, -1});
    for (std::size_t k = 0; k < dim_; ++k) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::uint32_t i = begin; i < end; ++i) {
            lo = std::min(lo, coord(order_[i], k));
            hi = std::max(hi, coord(order_[i], k));
        }
        bbox_lo_.push_back(lo);
        bbox_hi_.push_back(hi);
    }
    if (end - begin <= leaf_size_) return index;

    const std::size_t axis = depth % dim_;
    const std::uint32_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](std::uint32_t a, std::uint32_t b) {
                         const double ca = coord(a, axis);
                         const double cb = coord(b, axis);
                         return ca < cb || (ca == cb && a < b);
                     });
    const std::int32_t left = build(begin, mid, depth + 1);
    const std::int32_t right = build(mid, end, depth + 1);
    nodes_[index].left = left;
    nodes_[index].right = right;
    return index;
}

bool KdTree::range_empty(const Box& box) const {
    if (box.dim() != dim_) throw DimensionMismatch("range_empty: box dimension differs");
    if (box.empty() || nodes_.empty()) return true;

    std::vector<std::int32_t> stack{0};
    while (!stack.empty()) {
        const std::int32_t id = stack.back();
        stack.pop_back();
        const Node& node = nodes_[id];
        const double* lo = &bbox_lo_[id * dim_];
        const double* hi = &bbox_hi_[id * dim_];

        bool disjoint = false;
        bool inside = true;
        for (std::size_t k = 0; k < dim_ && !disjoint; ++k) {
            const Interval& iv = box.axis(k);
            if (hi[k] < iv.lo || (hi[k] == iv.lo && !iv.lo_closed) || lo[k] > iv.hi ||
                (lo[k] == iv.hi && !iv.hi_closed)) {
                disjoint = true;
            }
            inside = inside && iv.contains(lo[k]) && iv.contains(hi[k]);
        }
        if (disjoint) continue;
        if (inside) return false;
        if (node.left < 0) {
            for (std::uint32_t i = node.begin; i < node.end; ++i) {
                const std::uint32_t p = order_[i];
                bool in = true;
                for (std::size_t k = 0; k < dim_ && in; ++k) in = box.axis(k).contains(coord(p, k));
                if (in) return false;
            }
            continue;
        }
        stack.push_back(node.left);
        stack.push_back(node.right);
    }
    return true;
}

std::vector<std::vector<std::uint32_t>> KdTree::leaves() const {
    std::vector<std::vector<std::uint32_t>> out;
    for (const Node& node : nodes_) {
        if (node.left >= 0) continue;
        out.emplace_back(order_.begin() + node.begin, order_.begin() + node.end);
    }
    return out;
}

}  // namespace boxph
