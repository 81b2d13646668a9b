#pragma once

#include <optional>
#include <string>
#include <vector>

namespace linkvol {

// Reference data transcribed from the bounds tables: classical name, source
// link, family template, and the lower/upper bound cells (numeric strings or
// referential expressions like 2V0, 4V1).
struct BoundsRow {
    int row;
    std::string classical;
    std::string source;
    std::string family;
    std::string lower;
    std::string upper;
};

const std::vector<BoundsRow>& bounds_table();

// Diagonal family p p volumes for p = 2..24.
const std::vector<std::pair<std::string, double>>& pp_table();

// One-parameter subfamily bounds of 8*p 0.q 0 (f2..f5) and 8*p 0.-q 0
// (f2'..f5'): fixed q, lower = Vol at p=2, upper = Vol of the p-augmented
// symbol.
struct SubfamilyRow {
    int q;
    std::string lower_symbol;
    double lower;
    std::string upper_symbol;
    double upper;
};
const std::vector<SubfamilyRow>& f_subfamilies();
const std::vector<SubfamilyRow>& f_prime_subfamilies();

}  // namespace linkvol
