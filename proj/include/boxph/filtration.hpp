#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "boxph/geometry.hpp"

namespace boxph {

/// A simplex of dimension 0..3 with its filtration radius.
struct Simplex {
    std::array<std::uint32_t, 4> v{};  // sorted; only the first dim + 1 are used
    std::uint8_t dim = 0;
    double value = 0.0;

    std::span<const std::uint32_t> vertices() const { return {v.data(), std::size_t{dim} + 1u}; }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.dim == b.dim && a.value == b.value && a.v == b.v;
    }
};

/// Total order used for filtrations: value, then dimension, then vertices.
bool filtration_less(const Simplex& a, const Simplex& b);

/// All triangles of the flag complex of `edges`, valued by their longest edge.
std::vector<Simplex> clique_triangles(const EdgeSet& edges, std::size_t n);

/// All 4-cliques of `edges` that extend a triangle in `triangles`.
std::vector<Simplex> clique_tetrahedra(const EdgeSet& edges, std::span<const Simplex> triangles);

/// A flag filtration in simplexwise order with sparse boundaries.
class Filtration {
public:
    Filtration() = default;
    Filtration(std::vector<Simplex> simplices, int max_dim);

    std::size_t size() const { return simplices_.size(); }
    int max_dim() const { return max_dim_; }
    const Simplex& operator[](std::size_t i) const { return simplices_[i]; }
    const std::vector<Simplex>& simplices() const { return simplices_; }

    /// Indices of the codimension-1 faces of simplex i, in increasing order.
    std::span<const std::uint32_t> boundary(std::size_t i) const {
        return {faces_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    std::size_t count(int dim) const;

private:
    std::vector<Simplex> simplices_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<std::uint32_t> faces_;
    int max_dim_ = 0;
};

/// Vertices of the cloud at 0 plus the flag complex of `edges` up to
/// dimension `max_dim` (1..3).
Filtration build_filtration(const PointCloud& cloud, const EdgeSet& edges, int max_dim);

}  // namespace boxph
