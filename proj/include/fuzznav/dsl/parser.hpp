#pragma once

#include "fuzznav/fuzzy/inference.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fuzznav::dsl {

enum class ErrorKind {
    Syntax,
    UnknownVariable,
    UnknownLabel,
    DuplicateRule,
    IncompleteRuleBase,
    BadNumber,
};

std::string to_string(ErrorKind kind);

// First defect found in document order; position is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, int column, ErrorKind kind, std::string message);

    const std::string& source() const { return source_; }
    int line() const { return line_; }
    int column() const { return column_; }
    ErrorKind kind() const { return kind_; }
    const std::string& message() const { return message_; }

private:
    std::string source_;
    int line_;
    int column_;
    ErrorKind kind_;
    std::string message_;
};

// One whitespace-delimited token with its source position.
struct Token {
    std::string text;
    int line;
    int column;
};

// Lexed statement lines of a definition file, before interpretation.
struct FisDocument {
    std::string source_name;
    std::vector<std::vector<Token>> statements; // nonempty token lists, in order
};

// Splits source into statements, dropping comments and blank lines.
FisDocument scan_document(const std::string& source, const std::string& source_name);

// Builds a system that passes validate() with zero violations, or throws
// ParseError. Pure function of the text.
fuzzy::FuzzyInferenceSystem parse(const std::string& source,
                                  const std::string& source_name = "<input>");

fuzzy::FuzzyInferenceSystem parse_file(const std::string& path);

} // namespace fuzznav::dsl
