#include "fuzznav/fuzzy/linguistic_variable.hpp"

#include <algorithm>

namespace fuzznav::fuzzy {

std::vector<double> LinguisticVariable::fuzzify(double x) const
{
    const double clamped = std::clamp(x, universe_min, universe_max);
    std::vector<double> degrees;
    degrees.reserve(terms.size());
    for (const auto& [label, mf] : terms)
        degrees.push_back(mf.evaluate(clamped));
    return degrees;
}

int LinguisticVariable::term_index(const std::string& label) const
{
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i].first == label)
            return static_cast<int>(i);
    return -1;
}

} // namespace fuzznav::fuzzy
