#include "boxph/generators.hpp"

#include <random>

namespace boxph {

PointCloud generate_uniform(std::size_t n, std::size_t dim, std::uint64_t seed) {
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> coords(n * dim);
    for (double& c : coords) c = unit(rng);
    return PointCloud(dim, std::move(coords));
}

PointCloud generate_s1s2(std::size_t n) {
    if (n == 0) return PointCloud(2, {});
    const double m = static_cast<double>(n);
    std::vector<double> coords;
    coords.reserve(4 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        coords.push_back(static_cast<double>(i) / m);
        coords.push_back(1.0 - static_cast<double>(i) / m);
    }
    for (std::size_t j = 1; j <= n; ++j) {
        coords.push_back(2.0 + static_cast<double>(j) / m);
        coords.push_back(1.0 - static_cast<double>(j) / m);
    }
    return PointCloud(2, std::move(coords));
}

PointCloud generate_five_point_example() {
    return PointCloud::from_rows({
        {0.0, 0.0, 0.0},
        {2.0, 1.0, 1.0},
        {1.4, 1.6, -0.6},
        {0.9, -0.3, -0.3},
        {1.1, 1.4, 1.2},
    });
}

PointCloud generate_eight_point_example() {
    return PointCloud::from_rows({
        {6.2, 1.1, 1.9},
        {2.4, 4.8, 1.4},
        {8.6, 4.4, 5.3},
        {7.3, 8.2, 4.9},
        {7.9, 3.9, 7.6},
        {4.2, 6.8, 0.2},
        {9.0, 9.2, 9.7},
        {1.0, 0.1, -2.4},
    });
}

std::optional<Generator> parse_generator(std::string_view name) {
    if (name == "uniform") return Generator::Uniform;
    if (name == "s1s2") return Generator::S1S2;
    if (name == "paper3") return Generator::FivePoint;
    if (name == "paper8") return Generator::EightPoint;
    return std::nullopt;
}

PointCloud generate(Generator g, std::size_t n, std::size_t dim, std::uint64_t seed) {
    switch (g) {
        case Generator::Uniform: return generate_uniform(n, dim, seed);
        case Generator::S1S2: return generate_s1s2(n);
        case Generator::FivePoint: return generate_five_point_example();
        case Generator::EightPoint: return generate_eight_point_example();
    }
    throw std::invalid_argument("unknown generator");
}

}  // namespace boxph
