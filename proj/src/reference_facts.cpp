#include "boxph/reference_facts.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <vector>

#include "boxph/delaunay.hpp"
#include "boxph/generators.hpp"
#include "boxph/io.hpp"

namespace boxph {

namespace {

using Ids = std::vector<std::uint32_t>;  // 1-based, as the points are named

bool close_to(double value, double expected) {
    return std::abs(value - expected) <= 8.0 * DBL_EPSILON * std::max(1.0, std::abs(expected));
}

std::string name_of(const Ids& ids) {
    std::string s = "{";
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (k) s += ",";
        s += "x" + std::to_string(ids[k]);
    }
    return s + "}";
}

std::string point_string(const std::vector<double>& z) {
    std::string s = "(";
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (k) s += ",";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", z[k]);
        s += buf;
    }
    return s + ")";
}

Ids zero_based(const Ids& ids) {
    Ids out;
    for (auto v : ids) out.push_back(v - 1);
    return out;
}

// z is a witness of the simplex at the expected radius
FactResult witness_fact(const PointCloud& cloud, const std::string& set, const Ids& ids,
                        const std::vector<double>& z, double radius) {
    const auto report = verify_witness(cloud, zero_based(ids), z);
    FactResult r;
    r.name = set + " witness " + point_string(z) + " of " + name_of(ids);
    r.passed = report.verdict && close_to(report.radius, radius);
    r.detail = "radius " + format_double(report.radius) + " expected " + format_double(radius) +
               (report.blocker ? ", blocked by x" + std::to_string(*report.blocker + 1) : "");
    return r;
}

// z is equidistant at `radius` from the simplex, but a site in `blockers` is strictly closer
FactResult blocked_fact(const PointCloud& cloud, const std::string& set, const Ids& ids,
                        const std::vector<double>& z, double radius, const Ids& blockers) {
    const auto vertices = zero_based(ids);
    const auto report = verify_witness(cloud, vertices, z);
    bool equidistant = true;
    for (auto v : vertices) equidistant = equidistant && close_to(dist_linf(z, cloud[v]), radius);
    const bool blocked =
        report.blocker &&
        std::find(blockers.begin(), blockers.end(), *report.blocker + 1) != blockers.end();

    FactResult r;
    r.name = set + " non-witness " + point_string(z) + " of " + name_of(ids);
    r.passed = equidistant && !report.verdict && blocked;
    r.detail = std::string(equidistant ? "equidistant " : "not equidistant at ") +
               format_double(radius);
    if (report.blocker) {
        r.detail += ", closest site x" + std::to_string(*report.blocker + 1) + " at " +
                    format_double(dist_linf(z, cloud[*report.blocker]));
    } else {
        r.detail += ", no closer site";
    }
    return r;
}

FactResult delaunay_edge_fact(const PointCloud& cloud, const std::string& set, std::uint32_t a,
                              std::uint32_t b) {
    const auto witness = find_edge_witness(cloud, a - 1, b - 1);
    FactResult r;
    r.name = set + " Delaunay edge " + name_of({a, b});
    r.passed = witness.has_value() && verify_witness(cloud, Ids{a - 1, b - 1}, *witness).verdict;
    r.detail = witness ? "witness " + point_string(*witness) : "region covered";
    return r;
}

}  // namespace

std::vector<FactResult> check_reference_facts() {
    std::vector<FactResult> out;

    const PointCloud five = generate_five_point_example();
    const std::string s5 = "five-point";
    out.push_back(witness_fact(five, s5, {1, 2}, {1.0, 0.0, 1.0}, 1.0));
    out.push_back(witness_fact(five, s5, {1, 3}, {0.8, 0.8, 0.0}, 0.8));
    out.push_back(witness_fact(five, s5, {2, 3}, {1.5, 1.5, 0.2}, 0.8));
    out.push_back(delaunay_edge_fact(five, s5, 1, 2));
    out.push_back(delaunay_edge_fact(five, s5, 1, 3));
    out.push_back(delaunay_edge_fact(five, s5, 2, 3));
    // endpoints of the segments where the unit cubes of x1, x2, x3 meet
    for (const auto& z : {std::vector<double>{1.0, 0.6, 0.0}, std::vector<double>{1.0, 0.6, 0.4},
                          std::vector<double>{1.0, 1.0, 0.4}}) {
        out.push_back(blocked_fact(five, s5, {1, 2, 3}, z, 1.0, {4, 5}));
    }

    const PointCloud eight = generate_eight_point_example();
    const std::string s8 = "eight-point";
    out.push_back(blocked_fact(eight, s8, {1, 2, 3, 4}, {5.95, 4.65, 1.75}, 3.55, {5, 6}));
    out.push_back(blocked_fact(eight, s8, {1, 2, 3, 4}, {5.05, 4.65, 4.95}, 3.55, {5, 6}));
    out.push_back(witness_fact(eight, s8, {1, 2, 3}, {5.5, 4.2, 3.9}, 3.1));
    out.push_back(witness_fact(eight, s8, {1, 2, 4}, {4.05, 4.65, 4.95}, 3.55));
    out.push_back(witness_fact(eight, s8, {1, 3, 4}, {8.75, 4.65, 1.75}, 3.55));
    out.push_back(witness_fact(eight, s8, {2, 3, 4}, {5.5, 5.1, 3.9}, 3.1));
    return out;
}

}  // namespace boxph
