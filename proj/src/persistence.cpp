#include "boxph/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace boxph {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        // all vertices are born at 0, so the elder is the smaller index
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
};

void add_pair(Diagram& dgm, int degree, double birth, double death) {
    if (birth == death) return;
    dgm[degree].push_back({birth, death});
}

void sort_diagram(Diagram& dgm) {
    for (auto& pairs : dgm.degrees) std::sort(pairs.begin(), pairs.end());
}

// a ^= b for sorted index vectors
void add_column(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(scratch));
    a.swap(scratch);
}

}  // namespace

Diagram persistence_h0(const Filtration& filtration) {
    std::size_t n = 0;
    for (const Simplex& s : filtration.simplices()) {
        if (s.dim == 0) n = std::max<std::size_t>(n, s.v[0] + 1u);
    }
    UnionFind uf(n);
    Diagram dgm;
    std::size_t components = filtration.count(0);
    for (const Simplex& s : filtration.simplices()) {
        if (s.dim != 1) continue;
        if (uf.unite(s.v[0], s.v[1])) {
            --components;
            add_pair(dgm, 0, 0.0, s.value);
        }
    }
    for (std::size_t c = 0; c < components; ++c) dgm[0].push_back({0.0, kInfinity});
    sort_diagram(dgm);
    return dgm;
}

Diagram persistence_reduce(const Filtration& filtration, int max_degree, bool clearing) {
    if (max_degree < 0 || max_degree > Diagram::kMaxDegree) {
        throw std::invalid_argument("max_degree must be 0, 1 or 2");
    }
    if (filtration.max_dim() <= max_degree) {
        throw InsufficientDimension("filtration of dimension " + std::to_string(filtration.max_dim()) +
                                    " cannot resolve degree " + std::to_string(max_degree));
    }

    const std::size_t m = filtration.size();
    constexpr std::uint32_t kNone = ~0u;
    std::vector<std::uint32_t> pivot_column(m, kNone);  // low -> column
    std::vector<char> negative(m, 0);                    // column reduced to a nonzero pivot
    std::vector<char> cleared(m, 0);
    std::vector<std::vector<std::uint32_t>> reduced(m);
    std::vector<std::uint32_t> scratch;

    const int top = max_degree + 1;
    std::vector<int> order(static_cast<std::size_t>(top));
    std::iota(order.begin(), order.end(), 1);
    if (clearing) std::reverse(order.begin(), order.end());

    for (int dim : order) {
        for (std::uint32_t j = 0; j < m; ++j) {
            if (filtration[j].dim != dim || cleared[j]) continue;
            const auto bd = filtration.boundary(j);
            std::vector<std::uint32_t> col(bd.begin(), bd.end());
            while (!col.empty() && pivot_column[col.back()] != kNone) {
                add_column(col, reduced[pivot_column[col.back()]], scratch);
            }
            if (col.empty()) continue;
            const std::uint32_t low = col.back();
            pivot_column[low] = j;
            negative[j] = 1;
            if (clearing) cleared[low] = 1;
            reduced[j] = std::move(col);
        }
    }

    Diagram dgm;
    dgm.max_degree = max_degree;
    for (std::uint32_t i = 0; i < m; ++i) {
        const Simplex& s = filtration[i];
        if (s.dim > max_degree || negative[i]) continue;
        const std::uint32_t killer = pivot_column[i];
        if (killer == kNone) {
            dgm[s.dim].push_back({s.value, kInfinity});
        } else {
            add_pair(dgm, s.dim, s.value, filtration[killer].value);
        }
    }
    sort_diagram(dgm);
    return dgm;
}

bool diagrams_equal(const Diagram& a, const Diagram& b, std::initializer_list<int> degrees) {
    for (int k : degrees) {
        auto x = a[k];
        auto y = b[k];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    return true;
}

}  // namespace boxph
