#include "boxph/filtration.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace boxph {

namespace {

struct Neighbor {
    std::uint32_t id;
    double value;
};

// Neighbors with a larger index, sorted by index.
std::vector<std::vector<Neighbor>> upper_adjacency(const EdgeSet& edges, std::size_t n) {
    std::vector<std::vector<Neighbor>> adj(n);
    for (const Edge& e : edges) {
        if (e.v >= n) throw std::out_of_range("edge endpoint exceeds vertex count");
        adj[e.u].push_back({e.v, e.value});
    }
    return adj;
}

bool lex_less(const Simplex& a, const Simplex& b) {
    return std::lexicographical_compare(a.v.begin(), a.v.begin() + a.dim + 1, b.v.begin(),
                                        b.v.begin() + b.dim + 1);
}

}  // namespace

bool filtration_less(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.dim != b.dim) return a.dim < b.dim;
    return lex_less(a, b);
}

std::vector<Simplex> clique_triangles(const EdgeSet& edges, std::size_t n) {
    const auto adj = upper_adjacency(edges, n);
    std::vector<Simplex> out;
    for (std::uint32_t u = 0; u < n; ++u) {
        const auto& nu = adj[u];
        for (std::size_t a = 0; a < nu.size(); ++a) {
            const auto& nv = adj[nu[a].id];
            // merge nu[a+1..] with nv
            auto x = nu.begin() + static_cast<std::ptrdiff_t>(a) + 1;
            auto y = nv.begin();
            while (x != nu.end() && y != nv.end()) {
                if (x->id < y->id) {
                    ++x;
                } else if (y->id < x->id) {
                    ++y;
                } else {
                    Simplex s;
                    s.dim = 2;
                    s.v = {u, nu[a].id, x->id, 0};
                    s.value = std::max({nu[a].value, x->value, y->value});
                    out.push_back(s);
                    ++x;
                    ++y;
                }
            }
        }
    }
    return out;
}

std::vector<Simplex> clique_tetrahedra(const EdgeSet& edges, std::span<const Simplex> triangles) {
    std::size_t n = 0;
    for (const Edge& e : edges) n = std::max<std::size_t>(n, e.v + 1u);
    const auto adj = upper_adjacency(edges, n);
    auto value_of = [&](std::uint32_t u, std::uint32_t w) -> const Neighbor* {
        const auto& nu = adj[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), w,
                                   [](const Neighbor& a, std::uint32_t id) { return a.id < id; });
        return it != nu.end() && it->id == w ? &*it : nullptr;
    };

    std::vector<Simplex> out;
    for (const Simplex& t : triangles) {
        if (t.dim != 2) throw std::invalid_argument("clique_tetrahedra: expected triangles");
        const auto [a, b, c, unused] = t.v;
        (void)unused;
        if (c >= n) continue;
        for (const Neighbor& w : adj[c]) {
            const Neighbor* aw = value_of(a, w.id);
            if (!aw) continue;
            const Neighbor* bw = value_of(b, w.id);
            if (!bw) continue;
            Simplex s;
            s.dim = 3;
            s.v = {a, b, c, w.id};
            s.value = std::max({t.value, w.value, aw->value, bw->value});
            out.push_back(s);
        }
    }
    return out;
}

Filtration::Filtration(std::vector<Simplex> simplices, int max_dim)
    : simplices_(std::move(simplices)), max_dim_(max_dim) {
    std::sort(simplices_.begin(), simplices_.end(), filtration_less);

    std::array<std::vector<std::uint32_t>, 4> by_dim;
    for (std::uint32_t i = 0; i < simplices_.size(); ++i) {
        const Simplex& s = simplices_[i];
        if (s.dim > 3) throw std::invalid_argument("simplex dimension above 3");
        by_dim[s.dim].push_back(i);
    }
    for (auto& ids : by_dim) {
        std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
            return lex_less(simplices_[a], simplices_[b]);
        });
    }

    offsets_.reserve(simplices_.size() + 1);
    for (const Simplex& s : simplices_) {
        if (s.dim > 0) {
            const auto& candidates = by_dim[s.dim - 1];
            const std::size_t first = faces_.size();
            for (int drop = 0; drop <= s.dim; ++drop) {
                Simplex face;
                face.dim = static_cast<std::uint8_t>(s.dim - 1);
                for (int k = 0, m = 0; k <= s.dim; ++k) {
                    if (k != drop) face.v[m++] = s.v[k];
                }
                auto it = std::lower_bound(candidates.begin(), candidates.end(), face,
                                           [&](std::uint32_t id, const Simplex& f) {
                                               return lex_less(simplices_[id], f);
                                           });
                if (it == candidates.end() || lex_less(face, simplices_[*it])) {
                    throw std::invalid_argument("filtration is missing a face");
                }
                faces_.push_back(*it);
            }
            std::sort(faces_.begin() + static_cast<std::ptrdiff_t>(first), faces_.end());
        }
        offsets_.push_back(static_cast<std::uint32_t>(faces_.size()));
    }
}

std::size_t Filtration::count(int dim) const {
    return static_cast<std::size_t>(std::count_if(
        simplices_.begin(), simplices_.end(), [dim](const Simplex& s) { return s.dim == dim; }));
}

Filtration build_filtration(const PointCloud& cloud, const EdgeSet& edges, int max_dim) {
    if (max_dim < 1 || max_dim > 3) throw std::invalid_argument("max_dim must be 1, 2 or 3");
    const std::size_t n = cloud.size();
    std::vector<Simplex> simplices;
    simplices.reserve(n + edges.size());
    for (std::uint32_t i = 0; i < n; ++i) {
        Simplex s;
        s.v[0] = i;
        simplices.push_back(s);
    }
    for (const Edge& e : edges) {
        Simplex s;
        s.dim = 1;
        s.v = {e.u, e.v, 0, 0};
        s.value = e.value;
        simplices.push_back(s);
    }
    if (max_dim >= 2) {
        auto triangles = clique_triangles(edges, n);
        if (max_dim >= 3) {
            auto tetrahedra = clique_tetrahedra(edges, triangles);
            simplices.insert(simplices.end(), tetrahedra.begin(), tetrahedra.end());
        }
        simplices.insert(simplices.end(), triangles.begin(), triangles.end());
    }
    return Filtration(std::move(simplices), max_dim);
}

}  // namespace boxph
