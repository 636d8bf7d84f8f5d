#pragma once

#include "fuzznav/fuzzy/linguistic_variable.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuzznav::fuzzy {

// Zero-order TSK rule: a conjunction of (variable, label) conditions mapping
// to one crisp constant per output.
struct TskRule {
    std::vector<std::pair<std::string, std::string>> antecedent;
    std::vector<std::pair<std::string, double>> consequent;

    bool operator==(const TskRule&) const = default;
};

struct OutputSpec {
    std::string name;
    double clamp_min = 0.0;
    double clamp_max = 1.0;
    std::string unit;

    bool operator==(const OutputSpec&) const = default;
};

enum class TNorm { Product, Minimum };

struct FuzzyInferenceSystem {
    std::vector<LinguisticVariable> inputs;
    std::vector<OutputSpec> outputs;
    std::vector<TskRule> rules;
    TNorm tnorm = TNorm::Product;

    const LinguisticVariable* find_input(const std::string& name) const;
    const OutputSpec* find_output(const std::string& name) const;

    bool operator==(const FuzzyInferenceSystem&) const = default;
};

struct Violation {
    std::string location; // "variable 'dist'", "rule 7", ...
    std::string message;
};

// Raised when inference is asked something the rule base cannot answer
// (unknown variable/label, or no rule fired).
class InferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Degree of antecedent satisfaction under the system's t-norm.
double firing_strength(const FuzzyInferenceSystem& fis, const TskRule& rule,
                       const std::map<std::string, std::vector<double>>& fuzzified);

// Normalized weighted sum of rule consequents, clamped to each output range.
std::map<std::string, double> infer(const FuzzyInferenceSystem& fis,
                                    const std::map<std::string, double>& crisp_inputs);

// Structural checks: unique labels, universe coverage, partition of unity,
// rule-base completeness, consequent completeness, clamp ranges. Violations
// are data, not failures.
std::vector<Violation> validate(const FuzzyInferenceSystem& fis);

} // namespace fuzznav::fuzzy
