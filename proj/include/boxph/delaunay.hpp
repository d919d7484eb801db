#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boxph/geometry.hpp"

namespace boxph {

/// Outcome of checking a candidate witness point for a simplex.
struct WitnessReport {
    std::vector<std::uint32_t> simplex;
    std::vector<double> candidate;
    double radius = 0.0;  // half the simplex diameter
    bool verdict = false;
    /// Closest site strictly nearer to the candidate than `radius`, if any.
    std::optional<std::uint32_t> blocker;
};

/// Checks that `z` is equidistant (radius = diam/2) from every vertex of
/// `simplex` and that no site of the cloud is strictly closer.
///
/// Distances are compared with an absolute tolerance; a negative value
/// selects 8 ulps of the largest coordinate magnitude involved, which
/// absorbs the rounding of decimal inputs.
WitnessReport verify_witness(const PointCloud& cloud, std::span<const std::uint32_t> simplex,
                             std::span<const double> z, double tolerance = -1.0);

/// The closed box A = B(p, r) ∩ B(q, r), r = d_inf(p, q) / 2, on which the
/// witnesses of edge {i, j} live. Rounding on the axis realizing the
/// distance can leave the two bounds an ulp apart in either order; they are
/// returned ordered.
Box edge_witness_region(const PointCloud& cloud, std::uint32_t i, std::uint32_t j);

/// A point of A not covered by the open balls of radius r around the other
/// sites, or nullopt if A is covered.
///
/// Exact for the box model: uncovered points of A form a closed set that is
/// a union of cells of the grid spanned by the bounds of A and of the
/// covering balls, so it is non-empty iff a grid vertex is uncovered. The
/// grid is searched axis by axis, keeping only balls that contain the prefix.
std::optional<std::vector<double>> find_edge_witness(const PointCloud& cloud, std::uint32_t i,
                                                     std::uint32_t j);

/// Whether {i, j} is an edge of the l_inf-Delaunay complex.
bool is_delaunay_edge(const PointCloud& cloud, std::uint32_t i, std::uint32_t j);

/// All l_inf-Delaunay edges, valued at half their length. Quadratic in the
/// number of pairs times the local grid size; meant for small clouds.
EdgeSet alpha_flag_edges(const PointCloud& cloud);

}  // namespace boxph
