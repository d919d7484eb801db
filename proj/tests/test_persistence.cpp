#include <doctest.h>

#include <map>

#include "boxph/delaunay.hpp"
#include "boxph/filtration.hpp"
#include "boxph/minibox.hpp"
#include "boxph/persistence.hpp"
#include "oracles.hpp"

using namespace boxph;

namespace {

// Dense F2 reduction without clearing. Boundaries are rebuilt from vertex
// lists so the filtration's own face indices are not trusted.
Diagram reference_diagram(const Filtration& f, int max_degree) {
    const std::size_t m = f.size();
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[{f[i].vertices().begin(), f[i].vertices().end()}] = i;
    std::vector<std::vector<bool>> cols(m, std::vector<bool>(m, false));
    for (std::size_t j = 0; j < m; ++j) {
        const auto sv = f[j].vertices();
        if (sv.size() < 2) continue;
        for (std::size_t drop = 0; drop < sv.size(); ++drop) {
            std::vector<std::uint32_t> face;
            for (std::size_t k = 0; k < sv.size(); ++k)
                if (k != drop) face.push_back(sv[k]);
            cols[j][index.at(face)] = true;
        }
    }
    auto low = [&](std::size_t j) -> long {
        for (long i = long(m) - 1; i >= 0; --i)
            if (cols[j][i]) return i;
        return -1;
    };
    std::vector<long> lows(m, -1);
    std::map<long, std::size_t> owner;
    for (std::size_t j = 0; j < m; ++j) {
        long l = low(j);
        while (l >= 0 && owner.count(l)) {
            const auto& other = cols[owner[l]];
            for (std::size_t i = 0; i < m; ++i) cols[j][i] = cols[j][i] != other[i];
            l = low(j);
        }
        lows[j] = l;
        if (l >= 0) owner[l] = j;
    }
    Diagram d;
    d.max_degree = max_degree;
    for (std::size_t i = 0; i < m; ++i) {
        if (f[i].dim > max_degree || lows[i] >= 0) continue;
        if (owner.count(long(i))) {
            const double death = f[owner[long(i)]].value;
            if (death != f[i].value) d[f[i].dim].push_back({f[i].value, death});
        } else {
            d[f[i].dim].push_back({f[i].value, kInfinity});
        }
    }
    return d;
}

Filtration full(const PointCloud& c, int max_dim) { return build_filtration(c, EdgeSet::complete(c), max_dim); }

}  // namespace

TEST_CASE("degree zero by union-find") {
    const auto one = PointCloud::from_rows({{1.0, 1.0}});
    const auto d1 = persistence_h0(full(one, 1));
    CHECK(d1[0] == std::vector<PersistencePair>{{0.0, kInfinity}});

    const auto two = PointCloud::from_rows({{0.0, 0.0}, {2.0, 0.5}});
    const auto d2 = persistence_h0(full(two, 1));
    CHECK(d2[0] == std::vector<PersistencePair>{{0.0, 1.0}, {0.0, kInfinity}});

    // two far-apart clusters joined by no edge
    const auto c = PointCloud::from_rows({{0, 0}, {1, 0.2}, {10, 10}, {11, 10.5}});
    const auto e = EdgeSet::from_pairs(c, {{0, 1}, {2, 3}});
    const auto d3 = persistence_h0(build_filtration(c, e, 1));
    CHECK(std::count_if(d3[0].begin(), d3[0].end(), [](auto& p) { return p.essential(); }) == 2);
}

TEST_CASE("a flag triangle kills its cycle at birth") {
    const auto c = PointCloud::from_rows({{0, 0}, {2, 0.5}, {1, 2}});
    const auto f = full(c, 2);
    REQUIRE(f.count(2) == 1);
    CHECK(persistence_reduce(f, 1)[1].empty());
}

TEST_CASE("corners of a perturbed square") {
    const auto raw = PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto c = preprocess(raw, 1e-6, 3);
    const auto f = full(c, 2);
    const auto dgm = persistence_reduce(f, 1);
    CHECK(diagrams_equal(dgm, reference_diagram(f, 1), {0, 1}));
    // in l_inf the diagonal equals the side, so any cycle dies almost at once
    for (const auto& p : dgm[1]) CHECK(p.death - p.birth < 1e-5);
}

TEST_CASE("reduction matches the dense reference") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto c = oracle::uniform(12, 2 + seed % 2, 60 + seed);
        const auto f = full(c, 3);
        const auto dgm = persistence_reduce(f, 2);
        CHECK(diagrams_equal(dgm, reference_diagram(f, 2), {0, 1, 2}));
        CHECK(diagrams_equal(dgm, persistence_reduce(f, 2, false), {0, 1, 2}));
    }
    const auto c = oracle::uniform(30, 3, 1);
    const auto f = build_filtration(c, minibox_edges(c), 2);
    CHECK(diagrams_equal(persistence_reduce(f, 1), reference_diagram(f, 1), {0, 1}));
}

TEST_CASE("union-find agrees with the reduction in degree zero") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto c = oracle::uniform(30, 2 + seed % 3, seed);
        for (const auto& e : {minibox_edges(c), EdgeSet::complete(c)}) {
            const auto f = build_filtration(c, e, 2);
            CHECK(diagrams_equal(persistence_h0(f), persistence_reduce(f, 1), {0}));
        }
    }
}

TEST_CASE("pair counts") {
    const auto c = oracle::uniform(40, 3, 8);
    const auto f = build_filtration(c, minibox_edges(c), 3);
    const auto dgm = persistence_reduce(f, 2);
    for (int k = 0; k <= 2; ++k) {
        CHECK(dgm[k].size() <= f.count(k));
        for (const auto& p : dgm[k]) CHECK(p.birth < p.death);
    }
    CHECK(std::count_if(dgm[0].begin(), dgm[0].end(), [](auto& p) { return p.essential(); }) == 1);
    CHECK_THROWS_AS(persistence_reduce(build_filtration(c, minibox_edges(c), 2), 2), InsufficientDimension);
}

TEST_CASE("Minibox, Delaunay and full filtrations share degrees zero and one") {
    for (std::size_t d : {2u, 3u}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto c = oracle::uniform(30, d, 500 + seed);
            const auto cech = persistence_reduce(full(c, 2), 1);
            const auto mini = persistence_reduce(build_filtration(c, minibox_edges(c), 2), 1);
            const auto alpha = persistence_reduce(build_filtration(c, alpha_flag_edges(c), 2), 1);
            CHECK(diagrams_equal(cech, mini, {0, 1}));
            CHECK(diagrams_equal(cech, alpha, {0, 1}));
        }
    }
}

TEST_CASE("diagram comparison") {
    Diagram a;
    a[0] = {{0.0, kInfinity}, {0.0, 0.5}};
    a[1] = {{0.2, 0.3}};
    Diagram b = a;
    std::swap(b[0][0], b[0][1]);
    CHECK(diagrams_equal(a, a, {0, 1, 2}));
    CHECK(diagrams_equal(a, b, {0, 1}));
    b[1][0].death = 0.31;
    CHECK_FALSE(diagrams_equal(a, b, {1}));
    CHECK(diagrams_equal(a, b, {0}));
}
