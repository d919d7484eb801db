#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "boxph/kd_tree.hpp"
#include "boxph/priority_search_tree.hpp"
#include "boxph/range_tree.hpp"
#include "boxph/staircase.hpp"
#include "oracles.hpp"

using namespace boxph;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PstEntry entry(Rect r, Point3 p = Point3::sentinel()) { return {p, r}; }

std::vector<double> v(std::initializer_list<double> xs) { return xs; }

bool scan_empty(const PointCloud& c, const Box& box) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (box.contains(c[i])) return false;
    }
    return true;
}

Box random_query_box(std::mt19937_64& rng, std::size_t d, bool open) {
    std::uniform_real_distribution<double> u(-0.1, 1.1);
    std::vector<double> lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = u(rng);
        hi[k] = u(rng);
        if (lo[k] > hi[k]) std::swap(lo[k], hi[k]);
    }
    return open ? Box::open(lo, hi) : Box::closed(lo, hi);
}

}  // namespace

TEST_CASE("staircase insert verdicts") {
    Staircase s;
    CHECK(s.insert({2.0, 2.0}));
    CHECK(s.size() == 1);

    Staircase one;
    REQUIRE(one.insert({1.0, 3.0}));
    CHECK_FALSE(one.insert({2.0, 4.0}));
    CHECK(one.points() == std::vector<Point2>{{1.0, 3.0}});
}

TEST_CASE("staircase sweep of a quadrant") {
    // q2, q1, q4, q3 form the staircase; q5 removes q1 and q4; q6 dominates q5
    Staircase s;
    for (Point2 q : {Point2{1, 8}, Point2{3, 6}, Point2{5, 4}, Point2{8, 1}}) CHECK(s.insert(q));
    CHECK(s.insert({2.5, 3}));
    CHECK(s.points() == std::vector<Point2>{{1, 8}, {2.5, 3}, {8, 1}});
    CHECK_FALSE(s.insert({6, 5}));
    CHECK(s.size() == 3);
}

TEST_CASE("staircase equals the minimal elements of everything inserted") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Staircase s;
        std::vector<Point2> seen;
        for (int i = 0; i < 200; ++i) {
            const Point2 p{u(rng), u(rng)};
            const bool expected = std::none_of(seen.begin(), seen.end(),
                                               [&](const Point2& q) { return dominates(p, q); });
            CHECK(s.insert(p) == expected);
            seen.push_back(p);
        }
        std::vector<Point2> minimal;
        for (const Point2& p : seen) {
            if (std::none_of(seen.begin(), seen.end(), [&](const Point2& q) { return dominates(p, q); })) {
                minimal.push_back(p);
            }
        }
        std::sort(minimal.begin(), minimal.end(), [](auto& a, auto& b) { return a.x < b.x; });
        const auto stored = s.points();
        CHECK(stored == minimal);
        for (std::size_t i = 0; i < stored.size(); ++i) {
            for (std::size_t j = 0; j < stored.size(); ++j) CHECK_FALSE(dominates(stored[i], stored[j]));
        }
    }
}

TEST_CASE("priority search tree initial pop") {
    PrioritySearchTree t;
    t.insert(entry({0, kInf, 0, kInf}, {2, 3, 1, 0}));
    const PstPop pop = t.pop_min();
    CHECK(pop.popped.point.id == 0);
    CHECK(pop.left == Rect{0, 2, 0, kInf});
    CHECK(pop.right == Rect{2, kInf, 0, 3});
    CHECK(t.empty());
}

TEST_CASE("priority search tree pop replaces the dominated rectangles") {
    // area under the staircase q2 (1,8), q1 (3,6), q4 (5,4), q3 (8,1)
    PrioritySearchTree t;
    t.insert(entry({0, 1, 0, kInf}));
    t.insert(entry({1, 3, 0, 8}, {2.5, 3, 5, 5}));
    t.insert(entry({3, 5, 0, 6}, {4, 2, 6, 6}));
    t.insert(entry({5, 8, 0, 4}));
    t.insert(entry({8, kInf, 0, 1}));
    REQUIRE(t.check_invariants());
    CHECK(t.top().point.id == 5);

    const PstPop pop = t.pop_min();
    CHECK(pop.popped.point.id == 5);
    CHECK(pop.left == Rect{1, 2.5, 0, 8});
    CHECK(pop.right == Rect{2.5, 8, 0, 3});
    const auto rest = t.entries();
    REQUIRE(rest.size() == 2);
    CHECK(rest[0].rect == Rect{0, 1, 0, kInf});
    CHECK(rest[1].rect == Rect{8, kInf, 0, 1});
    CHECK(t.top_marked());
    CHECK_THROWS_AS(t.pop_min(), std::logic_error);
}

TEST_CASE("priority search tree keeps the minimum on top under random operations") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        // a staircase-shaped tiling: heights decrease to the right
        const int m = 60;
        std::vector<PstEntry> tiles;
        double height = 100.0;
        for (int i = 0; i < m; ++i) {
            height -= u(rng);
            const Rect r{double(i), i + 1.0, 0.0, height};
            if (u(rng) < 0.25) {
                tiles.push_back(entry(r));
            } else {
                tiles.push_back(entry(r, {i + u(rng), height * u(rng), u(rng), i}));
            }
        }
        std::shuffle(tiles.begin(), tiles.end(), rng);
        PrioritySearchTree t(trial);
        std::vector<PstEntry> shadow;
        for (const auto& e : tiles) {
            t.insert(e);
            shadow.push_back(e);
            const double zmin = std::min_element(shadow.begin(), shadow.end(), [](auto& a, auto& b) {
                                    return a.point.z < b.point.z;
                                })->point.z;
            CHECK(t.top().point.z == zmin);
        }
        while (!t.empty() && !t.top_marked()) {
            const PstPop pop = t.pop_min();
            const Point3 q = pop.popped.point;
            std::erase_if(shadow, [&](const PstEntry& e) {
                return e.point.id == q.id || (q.x < e.rect.x2 && q.y < e.rect.y2);
            });
            const auto now = t.entries();
            REQUIRE(now.size() == shadow.size());
            CHECK(t.check_invariants());
            double zmin = kInf;
            for (const auto& e : shadow) zmin = std::min(zmin, e.point.z);
            if (!t.empty()) CHECK(t.top().point.z == zmin);
        }
    }
}

TEST_CASE("range_min_z") {
    const auto one = PointCloud::from_rows({{0.5, 0.5, 0.5}});
    const LayeredRangeTree t1(one);
    CHECK(range_min_z(t1, {0, 1, 0, 1}, 0.0).id == 0);
    CHECK(range_min_z(t1, {0.6, 1, 0, 1}, 0.0).is_sentinel());
    CHECK(range_min_z(t1, {0, 1, 0, 1}, 0.6) == Point3::sentinel());
}

TEST_CASE("range_min_z matches a linear scan") {
    const auto c = oracle::uniform(100, 3, 2);
    const LayeredRangeTree tree(c);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int q = 0; q < 50; ++q) {
        Rect r{u(rng), u(rng), u(rng), u(rng)};
        if (r.x1 > r.x2) std::swap(r.x1, r.x2);
        if (r.y1 > r.y2) std::swap(r.y1, r.y2);
        const double zmin = u(rng) * 0.5;
        std::int64_t best = -1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const double x = c.coord(i, 0), y = c.coord(i, 1), z = c.coord(i, 2);
            if (x < r.x1 || x > r.x2 || y < r.y1 || y > r.y2 || z < zmin) continue;
            if (best < 0 || z < c.coord(best, 2)) best = static_cast<std::int64_t>(i);
        }
        CHECK(range_min_z(tree, r, zmin).id == best);
    }
}

TEST_CASE("layered range tree min query matches a scan in several dimensions") {
    std::mt19937_64 rng(13);
    for (std::size_t d : {2u, 3u, 4u, 5u}) {
        const auto c = oracle::uniform(150, d, d);
        const LayeredRangeTree tree(c);
        // storage is O(n log^{d-1} n): one key and one id per point per cascade level
        const double levels = std::ceil(std::log2(150.0)) + 1.0;
        CHECK(double(tree.storage()) <= 2.0 * 150.0 * std::pow(levels, double(d - 1)));
        for (int q = 0; q < 100; ++q) {
            const Box box = random_query_box(rng, d, false);
            std::vector<double> lo, hi;
            closed_bounds(box, lo, hi);
            std::optional<std::uint32_t> best;
            for (std::uint32_t i = 0; i < c.size(); ++i) {
                if (!box.contains(c[i])) continue;
                if (!best || c.coord(i, d - 1) < c.coord(*best, d - 1)) best = i;
            }
            CHECK(tree.min_last_in(lo, hi) == best);
        }
    }
}

TEST_CASE("range emptiness") {
    const auto c = PointCloud::from_rows({{0, 0}, {2, 2}, {1, 1}});
    const LayeredRangeTree rt(c);
    const KdTree kd(c);
    const Box outside = Box::open(v({5, 5}), v({6, 6}));
    CHECK(rt.range_empty(outside));
    CHECK(kd.range_empty(outside));
    const Box mini = minibox(c[0], c[1]);
    CHECK_FALSE(rt.range_empty(mini));
    CHECK_FALSE(kd.range_empty(mini));
    const Box edge = minibox(c[0], c[2]);
    CHECK(rt.range_empty(edge));
    CHECK(kd.range_empty(edge));
    // the closed version of the same box holds its corners
    CHECK_FALSE(rt.range_empty(Box::closed(v({0, 0}), v({1, 1}))));
    CHECK_FALSE(kd.range_empty(Box::closed(v({0, 0}), v({1, 1}))));
}

TEST_CASE("range emptiness matches a scan in R^4") {
    const auto c = oracle::uniform(200, 4, 40);
    const LayeredRangeTree rt(c);
    const KdTree kd(c);
    std::mt19937_64 rng(41);
    int nonempty = 0;
    for (int q = 0; q < 100; ++q) {
        const Box box = random_query_box(rng, 4, q % 2 == 0);
        const bool expected = scan_empty(c, box);
        nonempty += !expected;
        CHECK(rt.range_empty(box) == expected);
        CHECK(kd.range_empty(box) == expected);
    }
    CHECK(nonempty > 10);
    // miniboxes of point pairs: the queries the edge strategies make
    for (std::size_t a = 0; a < 40; ++a) {
        for (std::size_t b = a + 1; b < 40; ++b) {
            const Box box = minibox(c[a], c[b]);
            const bool expected = scan_empty(c, box);
            CHECK(rt.range_empty(box) == expected);
            CHECK(kd.range_empty(box) == expected);
        }
    }
}

TEST_CASE("kd-tree leaves partition the points") {
    const auto c = oracle::uniform(333, 3, 1);
    const KdTree kd(c, 8);
    std::vector<int> seen(c.size(), 0);
    for (const auto& leaf : kd.leaves()) {
        CHECK(leaf.size() <= 8);
        for (auto i : leaf) ++seen[i];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
}
