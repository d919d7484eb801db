#pragma once

#include <string>
#include <vector>

namespace boxph {

struct FactResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Witness and non-witness checks on the five-point and eight-point
/// example sets in R^3.
std::vector<FactResult> check_reference_facts();

}  // namespace boxph
