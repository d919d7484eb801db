#include "boxph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

namespace boxph {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0 && !coords_.empty()) {
        throw DimensionMismatch("point cloud with zero dimension but non-empty coordinates");
    }
    if (dim_ != 0 && coords_.size() % dim_ != 0) {
        throw DimensionMismatch("coordinate count is not a multiple of the dimension");
    }
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    const std::size_t dim = rows.front().size();
    std::vector<double> coords;
    coords.reserve(rows.size() * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) throw DimensionMismatch("rows of unequal length");
        coords.insert(coords.end(), row.begin(), row.end());
    }
    return PointCloud(dim, std::move(coords));
}

double PointCloud::extent() const {
    double best = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
        double lo = INFINITY;
        double hi = -INFINITY;
        for (std::size_t i = 0; i < size(); ++i) {
            lo = std::min(lo, coord(i, k));
            hi = std::max(hi, coord(i, k));
        }
        if (size() > 1) best = std::max(best, hi - lo);
    }
    return best;
}

std::vector<std::size_t> PointCloud::axes_with_shared_coordinates() const {
    std::vector<std::size_t> axes;
    std::vector<double> values(size());
    for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t i = 0; i < size(); ++i) values[i] = coord(i, k);
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end()) axes.push_back(k);
    }
    return axes;
}

double dist_linf(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DimensionMismatch("dist_linf: points of dimension " + std::to_string(p.size()) +
                                " and " + std::to_string(q.size()));
    }
    double d = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) d = std::max(d, std::abs(p[k] - q[k]));
    return d;
}

double diameter_linf(const PointCloud& cloud, std::span<const std::uint32_t> vertices) {
    double d = 0.0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            d = std::max(d, dist_linf(cloud[vertices[a]], cloud[vertices[b]]));
        }
    }
    return d;
}

bool Interval::empty() const {
    if (lo > hi) return true;
    if (lo == hi) return !(lo_closed && hi_closed);
    return false;
}

bool Interval::contains(double x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

namespace {

Interval intersect(const Interval& a, const Interval& b) {
    Interval r;
    if (a.lo > b.lo) {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed;
    } else if (b.lo > a.lo) {
        r.lo = b.lo;
        r.lo_closed = b.lo_closed;
    } else {
        r.lo = a.lo;
        r.lo_closed = a.lo_closed && b.lo_closed;
    }
    if (a.hi < b.hi) {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed;
    } else if (b.hi < a.hi) {
        r.hi = b.hi;
        r.hi_closed = b.hi_closed;
    } else {
        r.hi = a.hi;
        r.hi_closed = a.hi_closed && b.hi_closed;
    }
    return r;
}

// other ⊆ outer for non-empty `other`
bool interval_includes(const Interval& outer, const Interval& other) {
    const bool lo_ok = other.lo > outer.lo ||
                       (other.lo == outer.lo && (outer.lo_closed || !other.lo_closed));
    const bool hi_ok = other.hi < outer.hi ||
                       (other.hi == outer.hi && (outer.hi_closed || !other.hi_closed));
    return lo_ok && hi_ok;
}

Box make_box(std::span<const double> lo, std::span<const double> hi, bool closed) {
    if (lo.size() != hi.size()) throw DimensionMismatch("box corners of different dimension");
    std::vector<Interval> axes(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k) axes[k] = {lo[k], hi[k], closed, closed};
    return Box(std::move(axes));
}

Box make_ball(std::span<const double> center, double radius, bool closed) {
    std::vector<Interval> axes(center.size());
    for (std::size_t k = 0; k < center.size(); ++k) {
        axes[k] = {center[k] - radius, center[k] + radius, closed, closed};
    }
    return Box(std::move(axes));
}

}  // namespace

Box Box::closed(std::span<const double> lo, std::span<const double> hi) {
    return make_box(lo, hi, true);
}

Box Box::open(std::span<const double> lo, std::span<const double> hi) {
    return make_box(lo, hi, false);
}

Box Box::closed_ball(std::span<const double> center, double radius) {
    return make_ball(center, radius, true);
}

Box Box::open_ball(std::span<const double> center, double radius) {
    return make_ball(center, radius, false);
}

bool Box::empty() const {
    return std::any_of(axes_.begin(), axes_.end(), [](const Interval& i) { return i.empty(); });
}

bool Box::is_closed() const {
    return std::all_of(axes_.begin(), axes_.end(),
                       [](const Interval& i) { return i.lo_closed && i.hi_closed; });
}

bool Box::degenerate() const {
    return std::any_of(axes_.begin(), axes_.end(), [](const Interval& i) { return i.degenerate(); });
}

bool Box::contains(std::span<const double> point) const {
    if (point.size() != axes_.size()) throw DimensionMismatch("point and box dimensions differ");
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        if (!axes_[k].contains(point[k])) return false;
    }
    return true;
}

bool Box::contains(const Box& other) const {
    if (other.dim() != dim()) throw DimensionMismatch("box inclusion across dimensions");
    if (other.empty()) return true;
    if (empty()) return false;
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        if (!interval_includes(axes_[k], other.axes_[k])) return false;
    }
    return true;
}

Box minibox(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw DimensionMismatch("minibox of points of different dimension");
    std::vector<Interval> axes(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        axes[k] = {std::min(p[k], q[k]), std::max(p[k], q[k]), false, false};
    }
    return Box(std::move(axes));
}

Box box_intersection(std::span<const Box> boxes) {
    if (boxes.empty()) throw std::invalid_argument("box_intersection of an empty family");
    const std::size_t dim = boxes.front().dim();
    std::vector<Interval> axes(boxes.front().axes().begin(), boxes.front().axes().end());
    for (const Box& b : boxes.subspan(1)) {
        if (b.dim() != dim) throw DimensionMismatch("box_intersection: mixed dimensions");
        for (std::size_t k = 0; k < dim; ++k) axes[k] = intersect(axes[k], b.axis(k));
    }
    return Box(std::move(axes));
}

Box thicken(const Box& box, double eps) {
    if (eps < 0.0) throw std::invalid_argument("thicken: negative eps");
    if (!box.is_closed()) throw std::invalid_argument("thicken: box must be closed");
    if (box.empty()) return box;
    std::vector<Interval> axes(box.axes().begin(), box.axes().end());
    for (Interval& a : axes) {
        a.lo -= eps;
        a.hi += eps;
    }
    return Box(std::move(axes));
}

double default_perturbation(const PointCloud& cloud) {
    const double extent = cloud.extent();
    return extent > 0.0 ? 1e-9 * extent : 1e-9;
}

PointCloud preprocess(const PointCloud& cloud, double epsilon, std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("preprocess: epsilon must be positive");
    std::vector<std::size_t> bad = cloud.axes_with_shared_coordinates();
    if (bad.empty()) return cloud;

    constexpr int kMaxAttempts = 64;
    const std::size_t n = cloud.size();
    const std::size_t dim = cloud.dim();
    std::vector<double> coords(cloud.data().begin(), cloud.data().end());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-epsilon, epsilon);
    std::vector<double> values(n);

    for (std::size_t axis : bad) {
        bool done = false;
        for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
            for (std::size_t i = 0; i < n; ++i) {
                coords[i * dim + axis] = cloud.coord(i, axis) + offset(rng);
                values[i] = coords[i * dim + axis];
            }
            std::sort(values.begin(), values.end());
            done = std::adjacent_find(values.begin(), values.end()) == values.end();
        }
        if (!done) {
            std::ostringstream msg;
            msg << "preprocess: axis " << axis << " still has shared coordinates after "
                << kMaxAttempts << " perturbations with epsilon " << epsilon
                << "; increase epsilon";
            throw std::runtime_error(msg.str());
        }
    }
    return PointCloud(dim, std::move(coords));
}

EdgeSet EdgeSet::from_pairs(const PointCloud& cloud,
                            std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    EdgeSet set;
    set.edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a == b) continue;
        set.edges_.push_back({a, b, dist_linf(cloud[a], cloud[b]) / 2.0});
    }
    return set;
}

EdgeSet EdgeSet::complete(const PointCloud& cloud) {
    EdgeSet set;
    const auto n = static_cast<std::uint32_t>(cloud.size());
    set.edges_.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            set.edges_.push_back({a, b, dist_linf(cloud[a], cloud[b]) / 2.0});
        }
    }
    return set;
}

bool EdgeSet::contains(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                               [](const Edge& e, const std::pair<std::uint32_t, std::uint32_t>& key) {
                                   return std::pair{e.u, e.v} < key;
                               });
    return it != edges_.end() && it->u == u && it->v == v;
}

bool EdgeSet::includes(const EdgeSet& other) const {
    return std::all_of(other.begin(), other.end(),
                       [this](const Edge& e) { return contains(e.u, e.v); });
}

}  // namespace boxph
