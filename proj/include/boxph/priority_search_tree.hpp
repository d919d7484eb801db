#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <vector>

namespace boxph {

/// A 3D point carrying the index of the input point it came from. The
/// all-+inf point with id -1 is the "nothing here" sentinel returned by
/// empty range queries.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    std::int64_t id = -1;

    static Point3 sentinel() {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return {inf, inf, inf, -1};
    }
    bool is_sentinel() const { return std::isinf(z) && z > 0; }

    friend bool operator==(const Point3&, const Point3&) = default;
};

/// Closed rectangle [x1, x2] x [y1, y2] of the sweep plane.
struct Rect {
    double x1 = 0.0;
    double x2 = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// A "vertical" rectangle of the area under the current staircase together
/// with the lowest point (in z) whose projection lies inside it.
struct PstEntry {
    Point3 point;
    Rect rect;

    bool marked() const { return point.is_sentinel(); }
};

/// Result of removing the minimum: the popped entry and the two rectangles
/// that replace the area it and the dominated rectangles occupied.
struct PstPop {
    PstEntry popped;
    Rect left;
    Rect right;
};

/// Dynamic priority search tree over rectangles with pairwise disjoint
/// x-projections: a search tree on the left edge x1 that is also a min-heap
/// on the z of the stored point.
///
/// Balance comes from random treap priorities; the heap order on z is kept
/// as a subtree aggregate (each node caches the minimum-z entry of its
/// subtree), so the root aggregate is the global minimum and every root path
/// is z-monotone.
class PrioritySearchTree {
public:
    explicit PrioritySearchTree(std::uint64_t seed = 0x9e3779b97f4a7c15ULL);
    ~PrioritySearchTree();
    PrioritySearchTree(PrioritySearchTree&&) noexcept;
    PrioritySearchTree& operator=(PrioritySearchTree&&) noexcept;
    PrioritySearchTree(const PrioritySearchTree&) = delete;
    PrioritySearchTree& operator=(const PrioritySearchTree&) = delete;

    void insert(const PstEntry& entry);

    bool empty() const;
    std::size_t size() const;

    /// Entry with the smallest z (ties broken by smaller x1).
    const PstEntry& top() const;
    bool top_marked() const { return top().marked(); }

    /// Removes the minimum entry q and every rectangle [x1,x2]x[y1,y2] with
    /// q.x < x2 and q.y < y2 (the part now dominated by q). Returns q with the
    /// left rectangle [x1^q, q.x] x [y1^q, y2^q] and the right rectangle
    /// [q.x, x^1] x [y^1, q.y], where (x^1, y^1) is the lower-left corner of the
    /// first surviving rectangle to the right (x^1 = +inf, y^1 = y1^q if none).
    ///
    /// Remaining rectangles to the right are visited in increasing x starting
    /// at q.x. Throws std::logic_error if the tree is empty or its root is
    /// marked.
    PstPop pop_min();

    /// Entries in increasing x1.
    std::vector<PstEntry> entries() const;

    /// Checks the search-tree order, the cached minima and that no two
    /// rectangles overlap in x. Used by tests.
    bool check_invariants() const;

private:
    struct Node;
    using NodePtr = std::unique_ptr<Node>;

    static void update(Node* node);
    static void split(NodePtr root, double key, NodePtr& less, NodePtr& rest);
    static NodePtr merge(NodePtr a, NodePtr b);
    static NodePtr pop_leftmost(NodePtr& root);
    static NodePtr erase_key(NodePtr root, double key, NodePtr& removed);

    NodePtr root_;
    std::mt19937_64 rng_;
};

}  // namespace boxph
