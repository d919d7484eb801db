#include "boxph/staircase.hpp"

#include <iterator>

namespace boxph {

bool Staircase::insert(Point2 pt) {
    auto right = steps_.lower_bound(pt.x);
    if (right != steps_.begin()) {
        const auto left = std::prev(right);
        if (pt.y > left->second) return false;  // pt dominates its left neighbour
    }
    while (right != steps_.end() && right->second > pt.y) right = steps_.erase(right);
    steps_.emplace_hint(right, pt.x, pt.y);
    return true;
}

std::vector<Point2> Staircase::points() const {
    std::vector<Point2> out;
    out.reserve(steps_.size());
    for (const auto& [x, y] : steps_) out.push_back({x, y});
    return out;
}

}  // namespace boxph
