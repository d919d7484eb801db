#pragma once

#include <array>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <vector>

#include "boxph/filtration.hpp"

namespace boxph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
    double birth = 0.0;
    double death = kInfinity;

    bool essential() const { return death == kInfinity; }
    friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

/// Persistence diagrams in degrees 0..2, in radius units. Pairs with
/// birth == death are not stored.
struct Diagram {
    static constexpr int kMaxDegree = 2;
    std::array<std::vector<PersistencePair>, kMaxDegree + 1> degrees;
    int max_degree = 0;  // highest degree that was computed

    std::vector<PersistencePair>& operator[](int k) { return degrees.at(static_cast<std::size_t>(k)); }
    const std::vector<PersistencePair>& operator[](int k) const {
        return degrees.at(static_cast<std::size_t>(k));
    }
};

/// Raised when a filtration lacks the simplices a requested degree needs.
class InsufficientDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degree-0 diagram by union-find over the edges in filtration order.
Diagram persistence_h0(const Filtration& filtration);

/// Degrees 0..max_degree by F2 column reduction. With `clearing`, columns
/// are reduced from the top dimension down and columns already known to be
/// pivots are skipped. Requires filtration.max_dim() > max_degree.
Diagram persistence_reduce(const Filtration& filtration, int max_degree, bool clearing = true);

/// Multiset equality of the listed degrees, comparing values exactly.
bool diagrams_equal(const Diagram& a, const Diagram& b, std::initializer_list<int> degrees);

}  // namespace boxph
