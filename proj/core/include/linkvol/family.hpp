#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkvol/conway.hpp"

namespace linkvol {

// Address of a chain inside a ConwaySymbol: which vertex fill (-1 = root
// expression) and the child-index path down the tangle tree.
struct ChainPos {
    int fill = -1;
    std::vector<int> path;
    bool operator==(const ChainPos&) const = default;
    bool operator<(const ChainPos& o) const {
        return std::tie(fill, path) < std::tie(o.fill, o.path);
    }
};

// All chain positions eligible as parameters: |value| >= 2, zeros and
// polyhedron basis numbers excluded.
std::vector<ChainPos> parameters(const ConwaySymbol& sym);

std::optional<int> chain_value_at(const ConwaySymbol& sym, const ChainPos& pos);

// Family template: a symbol with named parameters. "8*p 0.-q 0" declares
// p (base +2) and q (base -2); bases of magnitude >= 2 may be given as the
// literal they replace in a concrete symbol.
struct FamilyParameter {
    std::string name;
    int base;  // signed, |base| >= 2
    ChainPos pos;
};

struct FamilySpec {
    ConwaySymbol base_symbol;  // template with parameters at their base values
    std::vector<FamilyParameter> params;
    std::string text;  // original template text
};

FamilySpec parse_family(const std::string& template_text);

// offsets k_a >= 0 per parameter name; value = sgn(base)(|base| + k)
using ParameterAssignment = std::map<std::string, int>;

ConwaySymbol instantiate(const FamilySpec& spec, const ParameterAssignment& asn);

ConwaySymbol source_link(const ConwaySymbol& sym);

// Replace the chain at pos by (2,-2) 0; a trailing zero already present in
// the surrounding product absorbs the added one ("p 0" becomes "(2,-2)").
ConwaySymbol augment(const ConwaySymbol& sym, const ChainPos& pos);

struct AugmentationResult {
    ConwaySymbol symbol;
    bool mirrored = false;            // mirror applied to clear negative chains
    bool has_negative_chains = false;  // warning: negatives remained
};
AugmentationResult complete_augmentation(const ConwaySymbol& sym);

struct TwistReport {
    int t_D = 0;
    int conjecture1_lower = 0;  // floor(t_D/2) + 1
};
TwistReport twist_number(const ConwaySymbol& sym);

// (2,2)-reversal: toggle the 0-suffix on a subtangle of the form (2,2),
// (2,-2), -(2,2) or those followed by 0.
ConwaySymbol reversal(const ConwaySymbol& sym, const ChainPos& pos);
bool reversal_eligible(const ConwaySymbol& sym, const ChainPos& pos);

struct SweepRange {
    std::string name;
    int lo = 0;  // offsets
    int hi = 0;
};

// Lexicographic enumeration of assignments; locks tie a parameter to another
// (equal offsets).
std::vector<std::pair<ParameterAssignment, ConwaySymbol>> sweep(
    const FamilySpec& spec, const std::vector<SweepRange>& ranges,
    const std::map<std::string, std::string>& locks = {});

}  // namespace linkvol
