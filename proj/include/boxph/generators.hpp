#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "boxph/geometry.hpp"

namespace boxph {

/// n points drawn i.i.d. uniformly from [0, 1]^dim.
PointCloud generate_uniform(std::size_t n, std::size_t dim, std::uint64_t seed);

/// Two parallel segments of n points each: p_i = (i/n, 1 - i/n) and
/// q_j = (2 + j/n, 1 - j/n), i, j = 1..n. Points p_1..p_n come first.
/// p_i and q_i share their y coordinate.
PointCloud generate_s1s2(std::size_t n);

/// Five points in R^3 whose l_inf-Delaunay complex is not flag.
PointCloud generate_five_point_example();

/// Eight points in R^3 whose Delaunay complex holds the four faces of
/// {x1, x2, x3, x4} but not the tetrahedron.
PointCloud generate_eight_point_example();

enum class Generator { Uniform, S1S2, FivePoint, EightPoint };

std::optional<Generator> parse_generator(std::string_view name);

/// `n` and `dim` are used by the generators that take them.
PointCloud generate(Generator g, std::size_t n, std::size_t dim, std::uint64_t seed);

}  // namespace boxph
