#include "boxph/delaunay.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "parallel.hpp"

namespace boxph {

WitnessReport verify_witness(const PointCloud& cloud, std::span<const std::uint32_t> simplex,
                             std::span<const double> z, double tolerance) {
    if (simplex.empty()) throw std::invalid_argument("verify_witness: empty simplex");
    if (z.size() != cloud.dim()) throw DimensionMismatch("verify_witness: candidate dimension");

    WitnessReport report;
    report.simplex.assign(simplex.begin(), simplex.end());
    report.candidate.assign(z.begin(), z.end());
    report.radius = diameter_linf(cloud, simplex) / 2.0;

    if (tolerance < 0.0) {
        double scale = std::max(1.0, report.radius);
        for (double c : z) scale = std::max(scale, std::abs(c));
        for (std::uint32_t v : simplex) {
            for (double c : cloud[v]) scale = std::max(scale, std::abs(c));
        }
        tolerance = 8.0 * DBL_EPSILON * scale;
    }

    bool equidistant = true;
    for (std::uint32_t v : simplex) {
        if (std::abs(dist_linf(z, cloud[v]) - report.radius) > tolerance) equidistant = false;
    }
    double closest = report.radius - tolerance;
    for (std::uint32_t s = 0; s < cloud.size(); ++s) {
        const double d = dist_linf(z, cloud[s]);
        if (d < closest) {
            closest = d;
            report.blocker = s;
        }
    }
    report.verdict = equidistant && !report.blocker;
    return report;
}

Box edge_witness_region(const PointCloud& cloud, std::uint32_t i, std::uint32_t j) {
    const auto p = cloud[i];
    const auto q = cloud[j];
    const double r = dist_linf(p, q) / 2.0;
    std::vector<Interval> axes(cloud.dim());
    for (std::size_t k = 0; k < cloud.dim(); ++k) {
        double lo = std::max(p[k], q[k]) - r;
        double hi = std::min(p[k], q[k]) + r;
        if (lo > hi) std::swap(lo, hi);
        axes[k] = {lo, hi, true, true};
    }
    return Box(std::move(axes));
}

namespace {

struct CoverSearch {
    std::size_t dim;
    const std::vector<double>& ball_lo;  // dim values per site
    const std::vector<double>& ball_hi;
    const Box& region;
    std::vector<double> z;

    bool uncovered(std::size_t axis, const std::vector<std::uint32_t>& active) {
        const Interval& a = region.axis(axis);
        std::vector<double> candidates{a.lo, a.hi};
        for (std::uint32_t b : active) {
            for (double c : {ball_lo[b * dim + axis], ball_hi[b * dim + axis]}) {
                if (a.lo < c && c < a.hi) candidates.push_back(c);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<std::uint32_t> still;
        for (double c : candidates) {
            still.clear();
            for (std::uint32_t b : active) {
                if (ball_lo[b * dim + axis] < c && c < ball_hi[b * dim + axis]) still.push_back(b);
            }
            z[axis] = c;
            if (still.empty()) {
                for (std::size_t k = axis + 1; k < dim; ++k) z[k] = region.axis(k).lo;
                return true;
            }
            if (axis + 1 < dim && uncovered(axis + 1, still)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<double>> find_edge_witness(const PointCloud& cloud, std::uint32_t i,
                                                     std::uint32_t j) {
    if (i == j) throw std::invalid_argument("find_edge_witness: i == j");
    const std::size_t dim = cloud.dim();
    const double r = dist_linf(cloud[i], cloud[j]) / 2.0;
    const Box region = edge_witness_region(cloud, i, j);

    std::vector<double> ball_lo;
    std::vector<double> ball_hi;
    std::vector<std::uint32_t> active;
    for (std::uint32_t s = 0; s < cloud.size(); ++s) {
        if (s == i || s == j) continue;
        bool meets = true;
        const auto y = cloud[s];
        for (std::size_t k = 0; k < dim && meets; ++k) {
            meets = y[k] - r < region.axis(k).hi && y[k] + r > region.axis(k).lo;
        }
        if (!meets) continue;
        const auto b = static_cast<std::uint32_t>(active.size());
        active.push_back(b);
        for (std::size_t k = 0; k < dim; ++k) {
            ball_lo.push_back(y[k] - r);
            ball_hi.push_back(y[k] + r);
        }
    }

    CoverSearch search{dim, ball_lo, ball_hi, region, std::vector<double>(dim)};
    if (active.empty()) {
        for (std::size_t k = 0; k < dim; ++k) search.z[k] = region.axis(k).lo;
        return search.z;
    }
    if (search.uncovered(0, active)) return search.z;
    return std::nullopt;
}

bool is_delaunay_edge(const PointCloud& cloud, std::uint32_t i, std::uint32_t j) {
    return find_edge_witness(cloud, i, j).has_value();
}

EdgeSet alpha_flag_edges(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    auto pairs = detail::collect_pairs(n, [&](std::size_t i, std::vector<detail::IndexPair>& out) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto a = static_cast<std::uint32_t>(i);
            const auto b = static_cast<std::uint32_t>(j);
            if (is_delaunay_edge(cloud, a, b)) out.emplace_back(a, b);
        }
    });
    return EdgeSet::from_pairs(cloud, std::move(pairs));
}

}  // namespace boxph
