#include <doctest.h>

#include <cfloat>
#include <random>

#include "boxph/geometry.hpp"
#include "oracles.hpp"

using namespace boxph;

namespace {

std::vector<double> v(std::initializer_list<double> xs) { return xs; }

Box random_box(std::mt19937_64& rng, std::size_t d) {
    // small integer grid so touching and disjoint cases are frequent
    std::uniform_int_distribution<int> coord(0, 6);
    std::bernoulli_distribution flag(0.5);
    std::vector<Interval> axes;
    for (std::size_t k = 0; k < d; ++k) {
        int a = coord(rng);
        int b = coord(rng);
        if (a > b) std::swap(a, b);
        axes.push_back({double(a), double(b), flag(rng), flag(rng)});
    }
    return Box(axes);
}

}  // namespace

TEST_CASE("dist_linf") {
    CHECK(dist_linf(v({0, 0, 0}), v({2, 1, 1})) == 2.0);
    CHECK(dist_linf(v({1.5, -2}), v({1.5, -2})) == 0.0);
    CHECK(dist_linf(v({6.2, 1.1, 1.9}), v({2.4, 4.8, 1.4})) == doctest::Approx(3.8).epsilon(1e-15));
    CHECK_THROWS_AS(dist_linf(v({0, 0}), v({0, 0, 0})), DimensionMismatch);
}

TEST_CASE("dist_linf is symmetric and satisfies the triangle inequality") {
    const auto c = oracle::uniform(60, 4, 3, -5.0, 5.0);
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = 0; b < c.size(); ++b) {
            CHECK(dist_linf(c[a], c[b]) == dist_linf(c[b], c[a]));
            CHECK(dist_linf(c[a], c[b]) == oracle::linf(c, a, b));
            const std::size_t m = (a * 7 + b * 13) % c.size();
            CHECK(dist_linf(c[a], c[b]) <= dist_linf(c[a], c[m]) + dist_linf(c[m], c[b]));
        }
    }
}

TEST_CASE("minibox") {
    const Box unit = minibox(v({0, 0}), v({1, 1}));
    CHECK(unit == Box::open(v({0, 0}), v({1, 1})));
    CHECK(unit.contains(v({0.5, 0.5})));
    CHECK_FALSE(unit.contains(v({0.0, 0.5})));

    CHECK(minibox(v({0, 0}), v({0, 1})).empty());

    const Box b = minibox(v({6.2, 1.1, 1.9}), v({2.4, 4.8, 1.4}));
    CHECK(b == Box::open(v({2.4, 1.1, 1.4}), v({6.2, 4.8, 1.9})));
}

TEST_CASE("box_intersection") {
    const std::vector<Box> disjoint{Box::closed(v({0, 0}), v({1, 1})),
                                    Box::closed(v({2, 2}), v({3, 3}))};
    CHECK(box_intersection(disjoint).empty());

    const std::vector<Box> balls{Box::closed_ball(v({0, 0, 0}), 1.0),
                                 Box::closed_ball(v({2, 1, 1}), 1.0)};
    const Box a = box_intersection(balls);
    CHECK(a == Box::closed(v({1, 0, 0}), v({1, 1, 1})));
    CHECK(a.degenerate());
    CHECK_FALSE(a.empty());

    const Box b = Box::open(v({0, -1}), v({2, 3}));
    const std::vector<Box> twice{b, b};
    CHECK(box_intersection(twice) == b);

    // touching closed meets open: empty
    const std::vector<Box> touching{Box::closed(v({0}), v({1})), Box::open(v({1}), v({2}))};
    CHECK(box_intersection(touching).empty());

    const std::vector<Box> mixed{Box::closed(v({0}), v({1})), Box::closed(v({0, 0}), v({1, 1}))};
    CHECK_THROWS_AS(box_intersection(mixed), DimensionMismatch);
}

TEST_CASE("a family of boxes meets iff every two of them meet") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> count(2, 6);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t d = 1 + trial % 3;
        std::vector<Box> family;
        const int m = count(rng);
        for (int i = 0; i < m; ++i) family.push_back(random_box(rng, d));
        bool pairwise = true;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const std::vector<Box> two{family[i], family[j]};
                pairwise = pairwise && !box_intersection(two).empty();
            }
        }
        CHECK(!box_intersection(family).empty() == pairwise);
    }
}

TEST_CASE("thicken") {
    const Box ball = Box::closed_ball(v({0, 0, 0}), 1.0);
    CHECK(thicken(ball, 0.5) == Box::closed_ball(v({0, 0, 0}), 1.5));
    CHECK(thicken(ball, 0.0) == ball);
    CHECK_THROWS_AS(thicken(ball, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(thicken(Box::open(v({0}), v({1})), 0.1), std::invalid_argument);
}

TEST_CASE("thicken commutes with intersection and preserves inclusion") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_real_distribution<double> e(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> lo1(3), hi1(3), lo2(3), hi2(3);
        for (int k = 0; k < 3; ++k) {
            lo1[k] = u(rng);
            hi1[k] = lo1[k] + 2.0 + e(rng);
            lo2[k] = lo1[k] + e(rng);  // overlapping
            hi2[k] = lo2[k] + 1.0 + e(rng);
        }
        const Box a = Box::closed(lo1, hi1);
        const Box b = Box::closed(lo2, hi2);
        const double eps = e(rng);
        const std::vector<Box> ab{a, b};
        const std::vector<Box> thick{thicken(a, eps), thicken(b, eps)};
        CHECK(thicken(box_intersection(ab), eps) == box_intersection(thick));

        const Box inner = box_intersection(ab);
        REQUIRE(a.contains(inner));
        CHECK(thicken(a, eps).contains(thicken(inner, eps)));
    }
}

TEST_CASE("closed balls of half the distance meet in a box that is thin on some axis") {
    const auto c = oracle::uniform(40, 3, 8, -2.0, 2.0);
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            const double r = dist_linf(c[a], c[b]) / 2.0;
            int thin = 0;
            int proper = 0;
            for (std::size_t k = 0; k < c.dim(); ++k) {
                const double lo = std::max(c.coord(a, k), c.coord(b, k)) - r;
                const double hi = std::min(c.coord(a, k), c.coord(b, k)) + r;
                // rounding may leave the bounds of the thin axis an ulp apart either way
                if (std::abs(hi - lo) <= 4 * DBL_EPSILON * std::max(1.0, std::abs(lo))) ++thin;
                else if (lo < hi) ++proper;
            }
            CHECK(thin >= 1);
            CHECK(thin + proper == 3);
        }
    }
}

TEST_CASE("preprocess") {
    const auto distinct = PointCloud::from_rows({{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}});
    CHECK(preprocess(distinct, 1e-9, 1) == distinct);

    const auto twins = PointCloud::from_rows({{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}});
    CHECK(preprocess(twins, 1e-9, 1).has_distinct_coordinates());

    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) rows.push_back({double(i), double(j)});
    }
    const auto grid = PointCloud::from_rows(rows);
    const auto moved = preprocess(grid, 1e-9, 7);
    CHECK(moved.has_distinct_coordinates());
    double displacement = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) displacement = std::max(displacement, dist_linf(grid[i], moved[i]));
    CHECK(displacement <= 1e-9);
    CHECK(displacement > 0.0);
    CHECK(preprocess(grid, 1e-9, 7) == moved);
    CHECK_FALSE(preprocess(grid, 1e-9, 8) == moved);
    CHECK_THROWS_AS(preprocess(grid, 0.0, 7), std::invalid_argument);
}

TEST_CASE("preprocess only touches axes with shared values") {
    const auto c = PointCloud::from_rows({{0.0, 1.0}, {1.0, 1.0}, {2.0, 3.0}});
    const auto p = preprocess(c, 1e-6, 3);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(p.coord(i, 0) == c.coord(i, 0));
    CHECK(p.has_distinct_coordinates());
}

TEST_CASE("default perturbation scales with the extent") {
    CHECK(default_perturbation(PointCloud::from_rows({{0.0, 0.0}, {4.0, 1.0}})) == doctest::Approx(4e-9));
    CHECK(default_perturbation(PointCloud::from_rows({{1.0}})) == 1e-9);
}

TEST_CASE("EdgeSet canonical form") {
    const auto c = PointCloud::from_rows({{0.0, 0.0}, {2.0, 1.0}, {5.0, 5.0}});
    const auto e = EdgeSet::from_pairs(c, {{2, 0}, {1, 0}, {0, 1}});
    REQUIRE(e.size() == 2);
    CHECK(e[0] == Edge{0, 1, 1.0});
    CHECK(e[1] == Edge{0, 2, 2.5});
    CHECK(e.contains(1, 0));
    CHECK_FALSE(e.contains(1, 2));
    CHECK(EdgeSet::complete(c).size() == 3);
    CHECK(EdgeSet::complete(c).includes(e));
    CHECK_FALSE(e.includes(EdgeSet::complete(c)));
}
