#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace boxph {

/// Thrown when two geometric objects of different dimension are combined.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite set of points in R^d stored row-major.
///
/// The cloud is a value type; once preprocessed it is treated as immutable
/// and shared read-only between algorithms.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t dim, std::vector<double> coords);

    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    bool empty() const { return coords_.empty(); }

    std::span<const double> operator[](std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    double coord(std::size_t i, std::size_t axis) const { return coords_[i * dim_ + axis]; }
    std::span<const double> data() const { return coords_; }

    /// Largest per-axis extent of the bounding box (0 for fewer than two points).
    double extent() const;

    /// Axes on which at least two points share a coordinate value.
    std::vector<std::size_t> axes_with_shared_coordinates() const;
    bool has_distinct_coordinates() const { return axes_with_shared_coordinates().empty(); }

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

/// Chebyshev distance max_i |p_i - q_i|.
double dist_linf(std::span<const double> p, std::span<const double> q);

/// Chebyshev diameter of a subset of the cloud.
double diameter_linf(const PointCloud& cloud, std::span<const std::uint32_t> vertices);

/// One axis of a box. Endpoint openness is carried explicitly.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;

    bool empty() const;
    bool contains(double x) const;
    bool degenerate() const { return lo == hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-parallel box, a Cartesian product of intervals.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> axes) : axes_(std::move(axes)) {}

    static Box closed(std::span<const double> lo, std::span<const double> hi);
    static Box open(std::span<const double> lo, std::span<const double> hi);
    static Box closed_ball(std::span<const double> center, double radius);
    static Box open_ball(std::span<const double> center, double radius);

    std::size_t dim() const { return axes_.size(); }
    const Interval& axis(std::size_t k) const { return axes_[k]; }
    std::span<const Interval> axes() const { return axes_; }

    bool empty() const;
    bool is_closed() const;
    bool contains(std::span<const double> point) const;
    /// Set inclusion `other ⊆ *this`; the empty box is contained in everything.
    bool contains(const Box& other) const;
    /// True when at least one axis is a single point.
    bool degenerate() const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> axes_;
};

/// Open box spanned by p and q. Axes with p_i == q_i make it empty.
Box minibox(std::span<const double> p, std::span<const double> q);

/// Per-axis intersection. Returns an empty box (of the common dimension)
/// when some axis intersection is empty.
Box box_intersection(std::span<const Box> boxes);

/// Widens each axis of a closed box by eps on both sides.
Box thicken(const Box& box, double eps);

/// Default perturbation size: 1e-9 times the cloud's extent (1e-9 if the
/// extent is zero).
double default_perturbation(const PointCloud& cloud);

/// Removes shared coordinate values by adding i.i.d. uniform(-eps, eps)
/// offsets to every coordinate of each offending axis. Offsets are always
/// drawn against the original coordinates, so no coordinate moves by more
/// than eps. Deterministic for a given seed.
PointCloud preprocess(const PointCloud& cloud, double epsilon, std::uint64_t seed);

/// A pair of point indices (u < v) with filtration value d_inf(p_u, p_v) / 2.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double value = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Lexicographically sorted, duplicate-free list of edges.
class EdgeSet {
public:
    EdgeSet() = default;

    /// Canonicalizes pairs as (min, max), sorts, removes duplicates and
    /// assigns half-distance values from the cloud.
    static EdgeSet from_pairs(const PointCloud& cloud,
                              std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

    /// All n(n-1)/2 pairs; the edge set of the Čech / Vietoris-Rips complex.
    static EdgeSet complete(const PointCloud& cloud);

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const Edge& operator[](std::size_t i) const { return edges_[i]; }

    bool contains(std::uint32_t u, std::uint32_t v) const;
    /// True when every edge of `other` is also in this set.
    bool includes(const EdgeSet& other) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

}  // namespace boxph
