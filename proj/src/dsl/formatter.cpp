#include "fuzznav/dsl/formatter.hpp"

#include <charconv>
#include <sstream>

namespace fuzznav::dsl {

namespace {

// Shortest decimal that parses back to the exact same double.
std::string number(double value)
{
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

std::string unit_or_dash(const std::string& unit)
{
    return unit.empty() ? "-" : unit;
}

} // namespace

std::string format(const fuzzy::FuzzyInferenceSystem& fis)
{
    std::ostringstream os;
    for (const auto& v : fis.inputs) {
        os << "input " << v.name << ' ' << number(v.universe_min) << ' '
           << number(v.universe_max) << ' ' << unit_or_dash(v.unit) << '\n';
        for (const auto& [label, mf] : v.terms) {
            os << "term " << v.name << ' ' << label;
            if (mf.shape() == fuzzy::MembershipFunction::Shape::Triangular)
                os << " tri " << number(mf.a()) << ' ' << number(mf.b()) << ' '
                   << number(mf.d());
            else
                os << " trap " << number(mf.a()) << ' ' << number(mf.b()) << ' '
                   << number(mf.c()) << ' ' << number(mf.d());
            os << '\n';
        }
    }
    for (const auto& o : fis.outputs)
        os << "output " << o.name << ' ' << number(o.clamp_min) << ' ' << number(o.clamp_max)
           << ' ' << unit_or_dash(o.unit) << '\n';
    for (const auto& rule : fis.rules) {
        os << "rule if";
        for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
            if (i > 0)
                os << " and";
            os << ' ' << rule.antecedent[i].first << " is " << rule.antecedent[i].second;
        }
        os << " then ";
        for (std::size_t i = 0; i < rule.consequent.size(); ++i) {
            if (i > 0)
                os << ", ";
            os << rule.consequent[i].first << '=' << number(rule.consequent[i].second);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace fuzznav::dsl
