#include "fuzznav/dsl/parser.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fuzznav::dsl {

namespace {

bool is_identifier(const std::string& s)
{
    if (s.empty())
        return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char ch : s)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
            return false;
    return true;
}

struct Parser {
    const FisDocument& doc;
    fuzzy::FuzzyInferenceSystem fis;

    std::map<std::string, int> input_line;  // declaration line per variable
    std::map<std::string, int> output_line;
    std::vector<int> rule_line;
    // Label-index tuples already covered by the rules seen so far. -1 in a
    // stored constraint means "any label"; covered combinations are tracked
    // explicitly, so partial antecedents are expanded.
    std::set<std::vector<int>> covered;
    int last_line = 1;

    [[noreturn]] void fail(const Token& at, ErrorKind kind, const std::string& message) const
    {
        throw ParseError(doc.source_name, at.line, at.column, kind, message);
    }

    double number(const Token& token) const
    {
        std::string_view text = token.text;
        if (!text.empty() && text.front() == '+')
            text.remove_prefix(1);
        double value = 0.0;
        const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
        if (result.ec != std::errc{} || result.ptr != text.data() + text.size()
            || !std::isfinite(value))
            fail(token, ErrorKind::BadNumber, "expected a number, got '" + token.text + "'");
        return value;
    }

    std::string identifier(const Token& token, const char* what) const
    {
        if (!is_identifier(token.text))
            fail(token, ErrorKind::Syntax,
                 std::string("expected ") + what + ", got '" + token.text + "'");
        return token.text;
    }

    void expect_count(const std::vector<Token>& st, std::size_t n, const char* usage) const
    {
        if (st.size() != n)
            fail(st.front(), ErrorKind::Syntax, std::string("expected: ") + usage);
    }

    fuzzy::LinguisticVariable* find_input(const std::string& name)
    {
        for (auto& v : fis.inputs)
            if (v.name == name)
                return &v;
        return nullptr;
    }

    void parse_variable(const std::vector<Token>& st, bool is_input)
    {
        const char* usage = is_input ? "input <name> <min> <max> <unit>"
                                     : "output <name> <min> <max> <unit>";
        expect_count(st, 5, usage);
        const std::string name = identifier(st[1], "a name");
        const double lo = number(st[2]);
        const double hi = number(st[3]);
        if (input_line.count(name) || output_line.count(name))
            fail(st[1], ErrorKind::Syntax, "name '" + name + "' already declared");
        if (is_input) {
            if (!(lo < hi))
                fail(st[2], ErrorKind::Syntax, "universe must be a nonempty interval");
            fis.inputs.push_back({name, lo, hi, st[4].text, {}, true});
            input_line[name] = st[0].line;
        } else {
            if (lo > hi)
                fail(st[2], ErrorKind::Syntax, "clamp range is empty");
            fis.outputs.push_back({name, lo, hi, st[4].text});
            output_line[name] = st[0].line;
        }
    }

    void parse_term(const std::vector<Token>& st)
    {
        if (st.size() < 4)
            fail(st[0], ErrorKind::Syntax,
                 "expected: term <var> <label> tri|trap <params>");
        const std::string var = identifier(st[1], "a variable name");
        fuzzy::LinguisticVariable* input = find_input(var);
        if (input == nullptr)
            fail(st[1], ErrorKind::UnknownVariable, "unknown variable '" + var + "'");
        const std::string label = identifier(st[2], "a label");
        if (input->term_index(label) >= 0)
            fail(st[2], ErrorKind::Syntax,
                 "duplicate term label '" + label + "' for variable '" + var + "'");
        try {
            if (st[3].text == "tri") {
                expect_count(st, 7, "term <var> <label> tri <a> <b> <c>");
                input->terms.emplace_back(
                    label, fuzzy::MembershipFunction::triangular(number(st[4]), number(st[5]),
                                                                 number(st[6])));
            } else if (st[3].text == "trap") {
                expect_count(st, 8, "term <var> <label> trap <a> <b> <c> <d>");
                input->terms.emplace_back(
                    label, fuzzy::MembershipFunction::trapezoidal(number(st[4]), number(st[5]),
                                                                  number(st[6]), number(st[7])));
            } else {
                fail(st[3], ErrorKind::Syntax, "expected shape 'tri' or 'trap'");
            }
        } catch (const std::invalid_argument& e) {
            fail(st[4], ErrorKind::Syntax, e.what());
        }
    }

    void parse_rule(const std::vector<Token>& st)
    {
        static const char* usage =
            "rule if <var> is <label> [and <var> is <label>]* then <out>=<value>[, ...]";
        std::size_t pos = 1;
        fuzzy::TskRule rule;
        std::vector<int> constraint(fis.inputs.size(), -1);
        if (pos >= st.size() || st[pos].text != "if")
            fail(st[0], ErrorKind::Syntax, usage);
        ++pos;
        while (true) {
            if (pos + 2 >= st.size())
                fail(st.back(), ErrorKind::Syntax, usage);
            const Token& var_tok = st[pos];
            const std::string var = identifier(var_tok, "a variable name");
            if (st[pos + 1].text != "is")
                fail(st[pos + 1], ErrorKind::Syntax, usage);
            const Token& label_tok = st[pos + 2];
            const std::string label = identifier(label_tok, "a label");

            int var_index = -1;
            for (std::size_t i = 0; i < fis.inputs.size(); ++i)
                if (fis.inputs[i].name == var)
                    var_index = static_cast<int>(i);
            if (var_index < 0)
                fail(var_tok, ErrorKind::UnknownVariable, "unknown variable '" + var + "'");
            const int term = fis.inputs[var_index].term_index(label);
            if (term < 0)
                fail(label_tok, ErrorKind::UnknownLabel,
                     "unknown label '" + label + "' of variable '" + var + "'");
            if (constraint[var_index] >= 0)
                fail(var_tok, ErrorKind::Syntax, "variable '" + var + "' constrained twice");
            constraint[var_index] = term;
            rule.antecedent.emplace_back(var, label);

            pos += 3;
            if (pos < st.size() && st[pos].text == "and") {
                ++pos;
                continue;
            }
            break;
        }
        if (pos >= st.size() || st[pos].text != "then")
            fail(pos < st.size() ? st[pos] : st.back(), ErrorKind::Syntax, usage);
        ++pos;

        std::set<std::string> assigned;
        for (; pos < st.size(); ++pos) {
            std::string text = st[pos].text;
            if (text == ",")
                continue;
            if (text.back() == ',')
                text.pop_back();
            const auto eq = text.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= text.size())
                fail(st[pos], ErrorKind::Syntax, "expected <output>=<value>, got '" + text + "'");
            const std::string name = text.substr(0, eq);
            if (!is_identifier(name))
                fail(st[pos], ErrorKind::Syntax, "bad output name '" + name + "'");
            if (!output_line.count(name))
                fail(st[pos], ErrorKind::UnknownVariable, "unknown output '" + name + "'");
            if (!assigned.insert(name).second)
                fail(st[pos], ErrorKind::Syntax, "output '" + name + "' assigned twice");
            Token value_tok = st[pos];
            value_tok.text = text.substr(eq + 1);
            value_tok.column += static_cast<int>(eq) + 1;
            rule.consequent.emplace_back(name, number(value_tok));
        }
        for (const auto& out : fis.outputs)
            if (!assigned.count(out.name))
                fail(st[0], ErrorKind::Syntax, "output '" + out.name + "' not assigned");

        add_coverage(st[0], constraint);
        fis.rules.push_back(std::move(rule));
        rule_line.push_back(st[0].line);
    }

    // Expands the constraint over currently known labels and records every
    // covered combination, failing fast on the first overlap.
    void add_coverage(const Token& at, const std::vector<int>& constraint)
    {
        std::vector<int> combo(constraint.size(), 0);
        std::size_t total = 1;
        for (std::size_t i = 0; i < constraint.size(); ++i) {
            combo[i] = constraint[i] >= 0 ? constraint[i] : 0;
            if (constraint[i] < 0)
                total *= std::max<std::size_t>(fis.inputs[i].terms.size(), 1);
            if (total > (1u << 20))
                fail(at, ErrorKind::Syntax, "rule covers too many label combinations");
        }
        for (std::size_t n = 0; n < total; ++n) {
            if (!covered.insert(combo).second)
                fail(at, ErrorKind::DuplicateRule,
                     "rule duplicates a label combination already covered");
            for (std::size_t i = combo.size(); i-- > 0;) {
                if (constraint[i] >= 0)
                    continue;
                if (++combo[i] < static_cast<int>(fis.inputs[i].terms.size()))
                    break;
                combo[i] = 0;
            }
        }
    }

    // Positions validate() backstop findings at the relevant declaration.
    [[noreturn]] void fail_violation(const fuzzy::Violation& v) const
    {
        int line = last_line;
        ErrorKind kind = ErrorKind::Syntax;
        if (v.location.rfind("variable '", 0) == 0) {
            const std::string name = v.location.substr(10, v.location.size() - 11);
            if (const auto it = input_line.find(name); it != input_line.end())
                line = it->second;
        } else if (v.location.rfind("output '", 0) == 0) {
            const std::string name = v.location.substr(8, v.location.size() - 9);
            if (const auto it = output_line.find(name); it != output_line.end())
                line = it->second;
        } else if (v.location.rfind("rule ", 0) == 0) {
            const std::size_t idx = std::stoul(v.location.substr(5)) - 1;
            if (idx < rule_line.size())
                line = rule_line[idx];
        }
        if (v.message.rfind("incomplete rule base", 0) == 0) {
            kind = ErrorKind::IncompleteRuleBase;
            line = rule_line.empty() ? last_line : rule_line.back();
        } else if (v.message.rfind("duplicate rule", 0) == 0) {
            kind = ErrorKind::DuplicateRule;
            line = rule_line.empty() ? last_line : rule_line.back();
        }
        throw ParseError(doc.source_name, line, 1, kind, v.location + ": " + v.message);
    }

    fuzzy::FuzzyInferenceSystem run()
    {
        for (const auto& st : doc.statements) {
            last_line = st.front().line;
            const std::string& keyword = st.front().text;
            if (keyword == "input")
                parse_variable(st, true);
            else if (keyword == "output")
                parse_variable(st, false);
            else if (keyword == "term")
                parse_term(st);
            else if (keyword == "rule")
                parse_rule(st);
            else
                fail(st.front(), ErrorKind::Syntax, "unknown keyword '" + keyword + "'");
        }
        const auto violations = fuzzy::validate(fis);
        if (!violations.empty())
            fail_violation(violations.front());
        return std::move(fis);
    }
};

} // namespace

std::string to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::UnknownVariable: return "unknown-variable";
    case ErrorKind::UnknownLabel: return "unknown-label";
    case ErrorKind::DuplicateRule: return "duplicate-rule";
    case ErrorKind::IncompleteRuleBase: return "incomplete-rule-base";
    case ErrorKind::BadNumber: return "bad-number";
    }
    return "unknown";
}

namespace {
std::string format_error(const std::string& source, int line, int column, ErrorKind kind,
                         const std::string& message)
{
    std::ostringstream os;
    os << source << ':' << line << ':' << column << ": " << to_string(kind) << ": " << message;
    return os.str();
}
} // namespace

ParseError::ParseError(std::string source, int line, int column, ErrorKind kind,
                       std::string message)
    : std::runtime_error(format_error(source, line, column, kind, message)),
      source_(std::move(source)), line_(line), column_(column), kind_(kind),
      message_(std::move(message))
{
}

FisDocument scan_document(const std::string& source, const std::string& source_name)
{
    FisDocument doc{source_name, {}};
    int line_no = 1;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t end = source.find('\n', start);
        if (end == std::string::npos)
            end = source.size();
        std::string line = source.substr(start, end - start);
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);

        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t tok_start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            tokens.push_back({line.substr(tok_start, i - tok_start), line_no,
                              static_cast<int>(tok_start) + 1});
        }
        if (!tokens.empty())
            doc.statements.push_back(std::move(tokens));
        ++line_no;
        if (end == source.size())
            break;
        start = end + 1;
    }
    return doc;
}

fuzzy::FuzzyInferenceSystem parse(const std::string& source, const std::string& source_name)
{
    Parser parser{scan_document(source, source_name), {}};
    return parser.run();
}

fuzzy::FuzzyInferenceSystem parse_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open rule file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

} // namespace fuzznav::dsl
