#pragma once

#include "fuzznav/fuzzy/inference.hpp"

#include <string>

namespace fuzznav::dsl {

// Canonical pretty-printed definition: inputs with their terms, outputs,
// then rules. parse(format(fis)) reproduces an equal system; numbers use the
// shortest representation that round-trips the exact double.
std::string format(const fuzzy::FuzzyInferenceSystem& fis);

} // namespace fuzznav::dsl
