#include "fuzznav/fuzzy/inference.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <sstream>

namespace fuzznav::fuzzy {

namespace {

constexpr int kSamplePoints = 1000;
constexpr double kUnityTolerance = 1e-9;
// Completeness is checked by enumerating label combinations; refuse to
// enumerate absurdly large cross products.
constexpr std::size_t kMaxCombinations = 1u << 20;

std::string combo_to_string(const FuzzyInferenceSystem& fis, const std::vector<int>& combo)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < combo.size(); ++i) {
        if (i > 0)
            os << ", ";
        os << fis.inputs[i].terms[combo[i]].first;
    }
    os << ')';
    return os.str();
}

// Label index per input for the rule, or -1 when the rule leaves the input
// unconstrained (partial antecedent).
std::vector<int> rule_constraints(const FuzzyInferenceSystem& fis, const TskRule& rule)
{
    std::vector<int> constraint(fis.inputs.size(), -1);
    for (const auto& [var, label] : rule.antecedent) {
        for (std::size_t i = 0; i < fis.inputs.size(); ++i) {
            if (fis.inputs[i].name == var) {
                constraint[i] = fis.inputs[i].term_index(label);
                break;
            }
        }
    }
    return constraint;
}

} // namespace

const LinguisticVariable* FuzzyInferenceSystem::find_input(const std::string& name) const
{
    for (const auto& v : inputs)
        if (v.name == name)
            return &v;
    return nullptr;
}

const OutputSpec* FuzzyInferenceSystem::find_output(const std::string& name) const
{
    for (const auto& o : outputs)
        if (o.name == name)
            return &o;
    return nullptr;
}

double firing_strength(const FuzzyInferenceSystem& fis, const TskRule& rule,
                       const std::map<std::string, std::vector<double>>& fuzzified)
{
    double strength = 1.0;
    bool first = true;
    for (const auto& [var, label] : rule.antecedent) {
        const auto it = fuzzified.find(var);
        const LinguisticVariable* input = fis.find_input(var);
        if (it == fuzzified.end() || input == nullptr)
            throw InferenceError("rule references unknown variable '" + var + "'");
        const int idx = input->term_index(label);
        if (idx < 0 || static_cast<std::size_t>(idx) >= it->second.size())
            throw InferenceError("rule references unknown label '" + label + "' of variable '" + var + "'");
        const double degree = it->second[idx];
        if (first) {
            strength = degree;
            first = false;
        } else {
            strength = fis.tnorm == TNorm::Product ? strength * degree
                                                   : std::min(strength, degree);
        }
    }
    return strength;
}

std::map<std::string, double> infer(const FuzzyInferenceSystem& fis,
                                    const std::map<std::string, double>& crisp_inputs)
{
    std::map<std::string, std::vector<double>> fuzzified;
    for (const auto& input : fis.inputs) {
        const auto it = crisp_inputs.find(input.name);
        if (it == crisp_inputs.end())
            throw InferenceError("missing crisp value for input '" + input.name + "'");
        fuzzified.emplace(input.name, input.fuzzify(it->second));
    }

    std::map<std::string, double> weighted_sum;
    for (const auto& out : fis.outputs)
        weighted_sum[out.name] = 0.0;
    double total_weight = 0.0;

    for (const auto& rule : fis.rules) {
        const double w = firing_strength(fis, rule, fuzzified);
        if (w == 0.0)
            continue;
        total_weight += w;
        for (const auto& [name, z] : rule.consequent) {
            const auto it = weighted_sum.find(name);
            if (it == weighted_sum.end())
                throw InferenceError("rule assigns unknown output '" + name + "'");
            it->second += w * z;
        }
    }

    if (total_weight <= 0.0)
        throw InferenceError("no rule fired");

    std::map<std::string, double> result;
    for (const auto& out : fis.outputs) {
        const double value = weighted_sum[out.name] / total_weight;
        result[out.name] = std::clamp(value, out.clamp_min, out.clamp_max);
    }
    return result;
}

std::vector<Violation> validate(const FuzzyInferenceSystem& fis)
{
    std::vector<Violation> violations;
    const auto add = [&violations](std::string location, std::string message) {
        violations.push_back({std::move(location), std::move(message)});
    };

    // Inputs
    std::set<std::string> input_names;
    for (const auto& v : fis.inputs) {
        const std::string loc = "variable '" + v.name + "'";
        if (!input_names.insert(v.name).second)
            add(loc, "duplicate variable name");
        if (!(v.universe_min < v.universe_max)) {
            add(loc, "universe is not a nonempty interval");
            continue;
        }
        if (v.terms.empty()) {
            add(loc, "variable has no terms");
            continue;
        }
        std::set<std::string> labels;
        for (const auto& [label, mf] : v.terms)
            if (!labels.insert(label).second)
                add(loc, "duplicate term label '" + label + "'");

        bool covered = true;
        bool partition = true;
        for (int i = 0; i <= kSamplePoints; ++i) {
            const double x = v.universe_min
                + (v.universe_max - v.universe_min) * static_cast<double>(i) / kSamplePoints;
            double sum = 0.0;
            double max_degree = 0.0;
            for (const auto& [label, mf] : v.terms) {
                const double degree = mf.evaluate(x);
                sum += degree;
                max_degree = std::max(max_degree, degree);
            }
            if (max_degree <= 0.0)
                covered = false;
            if (std::abs(sum - 1.0) >= kUnityTolerance)
                partition = false;
        }
        if (!covered)
            add(loc, "terms do not cover the universe");
        if (v.partition_of_unity && !partition)
            add(loc, "term degrees do not sum to 1 across the universe");
    }

    // Outputs
    std::set<std::string> output_names;
    if (fis.outputs.empty())
        add("system", "no outputs declared");
    for (const auto& o : fis.outputs) {
        const std::string loc = "output '" + o.name + "'";
        if (!output_names.insert(o.name).second)
            add(loc, "duplicate output name");
        if (o.clamp_min > o.clamp_max)
            add(loc, "clamp range is empty");
    }

    // Rules
    for (std::size_t r = 0; r < fis.rules.size(); ++r) {
        const auto& rule = fis.rules[r];
        const std::string loc = "rule " + std::to_string(r + 1);
        if (rule.antecedent.empty())
            add(loc, "rule has no conditions");
        std::set<std::string> seen_vars;
        for (const auto& [var, label] : rule.antecedent) {
            const LinguisticVariable* input = fis.find_input(var);
            if (input == nullptr) {
                add(loc, "unknown variable '" + var + "'");
                continue;
            }
            if (!seen_vars.insert(var).second)
                add(loc, "variable '" + var + "' constrained twice");
            if (input->term_index(label) < 0)
                add(loc, "unknown label '" + label + "' of variable '" + var + "'");
        }
        std::set<std::string> assigned;
        for (const auto& [name, value] : rule.consequent) {
            if (fis.find_output(name) == nullptr)
                add(loc, "unknown output '" + name + "'");
            if (!assigned.insert(name).second)
                add(loc, "output '" + name + "' assigned twice");
        }
        for (const auto& o : fis.outputs)
            if (!assigned.count(o.name))
                add(loc, "output '" + o.name + "' not assigned");
    }
    if (!violations.empty())
        return violations; // completeness needs structurally sound rules

    // Rule-base completeness: every label combination covered exactly once.
    std::size_t total = 1;
    for (const auto& v : fis.inputs) {
        total *= v.terms.size();
        if (total > kMaxCombinations) {
            add("system", "rule base too large for completeness check");
            return violations;
        }
    }
    if (fis.inputs.empty())
        return violations;

    std::vector<int> combo(fis.inputs.size(), 0);
    std::vector<std::vector<int>> constraints;
    constraints.reserve(fis.rules.size());
    for (const auto& rule : fis.rules)
        constraints.push_back(rule_constraints(fis, rule));

    std::size_t missing_count = 0, duplicate_count = 0;
    std::string first_missing, first_duplicate;
    for (std::size_t n = 0; n < total; ++n) {
        int covers = 0;
        for (const auto& constraint : constraints) {
            bool match = true;
            for (std::size_t i = 0; i < combo.size(); ++i)
                if (constraint[i] >= 0 && constraint[i] != combo[i]) {
                    match = false;
                    break;
                }
            if (match)
                ++covers;
        }
        if (covers == 0) {
            if (missing_count++ == 0)
                first_missing = combo_to_string(fis, combo);
        } else if (covers > 1) {
            if (duplicate_count++ == 0)
                first_duplicate = combo_to_string(fis, combo);
        }
        for (std::size_t i = combo.size(); i-- > 0;) {
            if (++combo[i] < static_cast<int>(fis.inputs[i].terms.size()))
                break;
            combo[i] = 0;
        }
    }
    if (missing_count > 0)
        add("system", "incomplete rule base: no rule for " + first_missing
                + (missing_count > 1 ? " and " + std::to_string(missing_count - 1) + " more" : ""));
    if (duplicate_count > 0)
        add("system", "duplicate rule: " + first_duplicate + " covered more than once"
                + (duplicate_count > 1 ? " (" + std::to_string(duplicate_count) + " combinations)" : ""));

    return violations;
}

} // namespace fuzznav::fuzzy
