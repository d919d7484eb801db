#include "boxph/range_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace boxph {

LayeredRangeTree::LayeredRangeTree(const PointCloud& cloud)
    : dim_(cloud.dim()), n_(cloud.size()), coords_(cloud.data().begin(), cloud.data().end()) {
    if (n_ > 0 && dim_ < 2) throw DimensionMismatch("LayeredRangeTree needs dimension >= 2");
    if (n_ == 0) return;
    std::vector<std::uint32_t> ids(n_);
    for (std::uint32_t i = 0; i < n_; ++i) ids[i] = i;
    root_ = dim_ == 2 ? build_cascade(std::move(ids)) : build_level(std::move(ids), 0);
}

std::uint32_t LayeredRangeTree::build_level(std::vector<std::uint32_t> ids, std::uint32_t axis) {
    std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double ca = coord(a, axis);
        const double cb = coord(b, axis);
        return ca < cb || (ca == cb && a < b);
    });
    const auto index = static_cast<std::uint32_t>(levels_.size());
    levels_.emplace_back();
    levels_[index].axis = axis;
    levels_[index].keys.reserve(ids.size());
    for (std::uint32_t id : ids) levels_[index].keys.push_back(coord(id, axis));
    build_level_node(index, ids, 0, static_cast<std::uint32_t>(ids.size()));
    return index;
}

std::int32_t LayeredRangeTree::build_level_node(std::uint32_t level,
                                                const std::vector<std::uint32_t>& sorted,
                                                std::uint32_t begin, std::uint32_t end) {
    const auto node = static_cast<std::int32_t>(levels_[level].nodes.size());
    levels_[level].nodes.push_back({begin, end, -1, -1, 0});
    if (end - begin > 1) {
        const std::uint32_t mid = begin + (end - begin) / 2;
        const std::int32_t left = build_level_node(level, sorted, begin, mid);
        const std::int32_t right = build_level_node(level, sorted, mid, end);
        levels_[level].nodes[node].left = left;
        levels_[level].nodes[node].right = right;
    }
    std::vector<std::uint32_t> subset(sorted.begin() + begin, sorted.begin() + end);
    const std::uint32_t next_axis = levels_[level].axis + 1;
    const std::uint32_t child = next_axis + 2 == dim_ ? build_cascade(std::move(subset))
                                                      : build_level(std::move(subset), next_axis);
    levels_[level].nodes[node].child = child;
    return node;
}

std::uint32_t LayeredRangeTree::build_cascade(std::vector<std::uint32_t> ids) {
    const std::size_t axis = dim_ - 2;
    std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double ca = coord(a, axis);
        const double cb = coord(b, axis);
        return ca < cb || (ca == cb && a < b);
    });
    Cascade c;
    c.keys.reserve(ids.size());
    for (std::uint32_t id : ids) c.keys.push_back(coord(id, axis));
    build_cascade_node(c, ids, 0, static_cast<std::uint32_t>(ids.size()));
    cascades_.push_back(std::move(c));
    return static_cast<std::uint32_t>(cascades_.size() - 1);
}

std::int32_t LayeredRangeTree::build_cascade_node(Cascade& c,
                                                  const std::vector<std::uint32_t>& sorted,
                                                  std::uint32_t begin, std::uint32_t end) {
    const std::size_t last_axis = dim_ - 1;
    const auto node = static_cast<std::int32_t>(c.nodes.size());
    c.nodes.push_back({begin, end, -1, -1, 0, 0, 0});

    if (end - begin == 1) {
        c.nodes[node].offset = static_cast<std::uint32_t>(c.ids.size());
        c.nodes[node].length = 1;
        c.ids.push_back(sorted[begin]);
        c.last.push_back(coord(sorted[begin], last_axis));
        return node;
    }

    const std::uint32_t mid = begin + (end - begin) / 2;
    const std::int32_t left = build_cascade_node(c, sorted, begin, mid);
    const std::int32_t right = build_cascade_node(c, sorted, mid, end);
    const CascadeNode l = c.nodes[left];
    const CascadeNode r = c.nodes[right];

    // merge children arrays on (last coordinate, id)
    std::vector<std::uint32_t> merged;
    merged.reserve(l.length + r.length);
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    auto before = [&](std::uint32_t x, std::uint32_t y) {
        const double vx = c.last[l.offset + x];
        const double vy = c.last[r.offset + y];
        return vx < vy || (vx == vy && c.ids[l.offset + x] < c.ids[r.offset + y]);
    };
    while (a < l.length || b < r.length) {
        if (b == r.length || (a < l.length && before(a, b))) {
            merged.push_back(c.ids[l.offset + a++]);
        } else {
            merged.push_back(c.ids[r.offset + b++]);
        }
    }

    CascadeNode& self = c.nodes[node];
    self.left = left;
    self.right = right;
    self.offset = static_cast<std::uint32_t>(c.ids.size());
    self.length = static_cast<std::uint32_t>(merged.size());
    self.ptr_offset = static_cast<std::uint32_t>(c.left_ptr.size());
    for (std::uint32_t id : merged) {
        c.ids.push_back(id);
        c.last.push_back(coord(id, last_axis));
    }

    // cascade pointers: position of the first child element whose value is
    // >= the parent's value at each slot
    std::uint32_t li = 0;
    std::uint32_t ri = 0;
    for (std::uint32_t i = 0; i < self.length; ++i) {
        const double v = c.last[self.offset + i];
        while (li < l.length && c.last[l.offset + li] < v) ++li;
        while (ri < r.length && c.last[r.offset + ri] < v) ++ri;
        c.left_ptr.push_back(li);
        c.right_ptr.push_back(ri);
    }
    c.left_ptr.push_back(l.length);
    c.right_ptr.push_back(r.length);
    return node;
}

std::optional<std::uint32_t> LayeredRangeTree::min_last_in(std::span<const double> lo,
                                                           std::span<const double> hi) const {
    if (lo.size() != dim_ || hi.size() != dim_) {
        throw DimensionMismatch("range query dimension differs from tree dimension");
    }
    if (n_ == 0) return std::nullopt;
    for (std::size_t k = 0; k < dim_; ++k) {
        if (lo[k] > hi[k]) return std::nullopt;
    }
    Best best{std::numeric_limits<double>::infinity(), 0, false};
    if (dim_ == 2) {
        query_cascade(root_, lo, hi, best);
    } else {
        query_level(root_, lo, hi, best);
    }
    if (!best.found) return std::nullopt;
    return best.id;
}

void LayeredRangeTree::query_level(std::uint32_t level, std::span<const double> lo,
                                   std::span<const double> hi, Best& best) const {
    const Level& lv = levels_[level];
    const auto pb = static_cast<std::uint32_t>(
        std::lower_bound(lv.keys.begin(), lv.keys.end(), lo[lv.axis]) - lv.keys.begin());
    const auto pe = static_cast<std::uint32_t>(
        std::upper_bound(lv.keys.begin(), lv.keys.end(), hi[lv.axis]) - lv.keys.begin());
    if (pb >= pe) return;
    const bool child_is_cascade = lv.axis + 3 == dim_;

    std::int32_t stack[128];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Segment& s = lv.nodes[stack[--top]];
        if (s.end <= pb || s.begin >= pe) continue;
        if (pb <= s.begin && s.end <= pe) {
            if (child_is_cascade) {
                query_cascade(s.child, lo, hi, best);
            } else {
                query_level(s.child, lo, hi, best);
            }
            continue;
        }
        stack[top++] = s.left;
        stack[top++] = s.right;
    }
}

void LayeredRangeTree::query_cascade(std::uint32_t cascade, std::span<const double> lo,
                                     std::span<const double> hi, Best& best) const {
    const Cascade& c = cascades_[cascade];
    const std::size_t axis = dim_ - 2;
    const double zlo = lo[dim_ - 1];
    const double zhi = hi[dim_ - 1];
    const auto pb = static_cast<std::uint32_t>(
        std::lower_bound(c.keys.begin(), c.keys.end(), lo[axis]) - c.keys.begin());
    const auto pe = static_cast<std::uint32_t>(
        std::upper_bound(c.keys.begin(), c.keys.end(), hi[axis]) - c.keys.begin());
    if (pb >= pe) return;

    const CascadeNode& root = c.nodes[0];
    const auto root_begin = c.last.begin() + root.offset;
    const auto start = static_cast<std::uint32_t>(
        std::lower_bound(root_begin, root_begin + root.length, zlo) - root_begin);

    struct Frame {
        std::int32_t node;
        std::uint32_t pos;
    };
    Frame stack[128];
    int top = 0;
    stack[top++] = {0, start};
    while (top > 0) {
        const Frame f = stack[--top];
        const CascadeNode& nd = c.nodes[f.node];
        if (nd.end <= pb || nd.begin >= pe) continue;
        if (pb <= nd.begin && nd.end <= pe) {
            if (f.pos < nd.length) {
                const double v = c.last[nd.offset + f.pos];
                const std::uint32_t id = c.ids[nd.offset + f.pos];
                if (v <= zhi && (!best.found || v < best.value || (v == best.value && id < best.id))) {
                    best = {v, id, true};
                }
            }
            continue;
        }
        stack[top++] = {nd.left, c.left_ptr[nd.ptr_offset + f.pos]};
        stack[top++] = {nd.right, c.right_ptr[nd.ptr_offset + f.pos]};
    }
}

bool LayeredRangeTree::range_empty(const Box& box) const {
    if (box.dim() != dim_) throw DimensionMismatch("range_empty: box dimension differs");
    if (box.empty() || n_ == 0) return true;
    std::vector<double> lo;
    std::vector<double> hi;
    closed_bounds(box, lo, hi);
    return !min_last_in(lo, hi).has_value();
}

std::size_t LayeredRangeTree::storage() const {
    std::size_t total = 0;
    for (const Level& lv : levels_) total += lv.keys.size();
    for (const Cascade& c : cascades_) total += c.keys.size() + c.ids.size();
    return total;
}

void closed_bounds(const Box& box, std::vector<double>& lo, std::vector<double>& hi) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    lo.resize(box.dim());
    hi.resize(box.dim());
    for (std::size_t k = 0; k < box.dim(); ++k) {
        const Interval& iv = box.axis(k);
        lo[k] = iv.lo_closed ? iv.lo : std::nextafter(iv.lo, inf);
        hi[k] = iv.hi_closed ? iv.hi : std::nextafter(iv.hi, -inf);
    }
}

Point3 range_min_z(const LayeredRangeTree& tree, const Rect& xy, double zmin) {
    if (tree.dim() != 3) throw DimensionMismatch("range_min_z needs a 3D tree");
    const double lo[3] = {xy.x1, xy.y1, zmin};
    const double hi[3] = {xy.x2, xy.y2, std::numeric_limits<double>::infinity()};
    const auto hit = tree.min_last_in(lo, hi);
    if (!hit) return Point3::sentinel();
    return {tree.coord(*hit, 0), tree.coord(*hit, 1), tree.coord(*hit, 2), *hit};
}

}  // namespace boxph
