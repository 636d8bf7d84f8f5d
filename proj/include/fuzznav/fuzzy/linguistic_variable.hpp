#pragma once

#include "fuzznav/fuzzy/membership.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fuzznav::fuzzy {

// Named input with a closed universe of discourse partitioned into labeled
// fuzzy sets. Every variable in this project forms a partition of unity;
// validate() checks that unless partition_of_unity is cleared.
struct LinguisticVariable {
    std::string name;
    double universe_min = 0.0;
    double universe_max = 1.0;
    std::string unit;
    std::vector<std::pair<std::string, MembershipFunction>> terms;
    bool partition_of_unity = true;

    // Degrees per term, in declaration order. The input is clamped to the
    // universe before evaluation.
    std::vector<double> fuzzify(double x) const;

    // Index of a label, or -1 when absent.
    int term_index(const std::string& label) const;

    bool operator==(const LinguisticVariable&) const = default;
};

} // namespace fuzznav::fuzzy
