#pragma once

#include <string>
#include <vector>

#include "teven/formula.hpp"

namespace teven {

// One published identity: the weight polynomial and the expected right-hand
// side coefficients, both as expressions in the project's surface syntax
// (coefficients in the single variable k1, read as k).
struct AppendixEntry {
    std::string section;  // "A1" | "A2" | "A3"
    Family family;
    int n;
    std::string weight_expr;
    std::vector<std::pair<int, std::string>> expected_terms;  // (l, coeff expr)
};

// The embedded reference corpus (read-only).
const std::vector<AppendixEntry>& appendix_corpus();

// The entry's expected Formula, parsed into canonical form.
Formula expected_formula(const AppendixEntry& e);

// The same identity re-derived from scratch by the engine.
Formula derived_formula(const AppendixEntry& e);

}  // namespace teven
