#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace boxph {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// `a` dominates `b` when it is strictly larger on both coordinates.
inline bool dominates(const Point2& a, const Point2& b) { return a.x > b.x && a.y > b.y; }

/// Mutually non-dominating 2D points kept in a balanced ordered map keyed on
/// x. Sorted by x, the stored y values strictly decrease.
///
/// Used as the per-quadrant sweep state of the 3D staircase algorithm: the
/// stored points are the minimal elements of everything inserted so far, so a
/// new point has an empty minibox with the origin exactly when it dominates
/// none of them.
class Staircase {
public:
    /// Inserts `pt` if its minibox with the origin is empty of stored points.
    ///
    /// Returns true (empty minibox) iff the stored point immediately to the
    /// left of `pt` is absent or not dominated by `pt`. In that case every
    /// stored point dominating `pt` is removed and `pt` is stored. On false the
    /// staircase is left unchanged.
    bool insert(Point2 pt);

    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    void clear() { steps_.clear(); }

    /// Stored points in increasing x.
    std::vector<Point2> points() const;

private:
    std::map<double, double> steps_;
};

}  // namespace boxph
