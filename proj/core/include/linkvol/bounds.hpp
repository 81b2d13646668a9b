#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linkvol/family.hpp"
#include "linkvol/solver.hpp"

namespace linkvol {

// Volume provider used by the reporter; defaults to the full pipeline but
// tests and the CLI inject a caching wrapper.
using VolumeFn = std::function<VolumeResult(const ConwaySymbol&)>;
VolumeFn default_volume_fn(const SolverOptions& opts = {});

struct BoundsReport {
    std::string family_text;
    std::string source_symbol;
    std::string augmented_symbol;
    double lower = 0.0;  // 0 for non-hyperbolic source links
    double upper = 0.0;
    bool lower_ok = false;
    bool upper_ok = false;
    std::optional<std::string> lower_expr;
    std::optional<std::string> upper_expr;
    bool source_hyperbolic = true;
    bool augmentation_mirrored = false;
    std::vector<std::string> flags;
};

BoundsReport bounds(const FamilySpec& spec, const VolumeFn& vol);

struct SubfamilyBound {
    ParameterAssignment fixed;
    std::string lower_symbol;
    std::string upper_symbol;  // the varying-parameter augmented symbol
    double lower = 0.0;
    double upper = 0.0;
    bool ok = false;
};

// One varying parameter; all others fixed by `fixed` offsets.
SubfamilyBound subfamily_bounds(const FamilySpec& spec, const ParameterAssignment& fixed,
                                const std::string& varying, const VolumeFn& vol);

struct SandwichCheck {
    bool applicable = true;
    bool holds = false;
    std::vector<std::string> counterexamples;
};

// Monotonicity in each parameter plus both endpoint bounds over the sampled
// ranges.
SandwichCheck verify_sandwich(const FamilySpec& spec, const std::vector<SweepRange>& ranges,
                              const VolumeFn& vol);

struct TableRow {
    std::string classical;
    std::string source;
    std::string family;
    double lower = 0.0;
    double upper = 0.0;
    std::string lower_cell;  // referential expression when matched
    std::string upper_cell;
};

std::vector<TableRow> bounds_rows(const std::vector<FamilySpec>& specs, const VolumeFn& vol);

}  // namespace linkvol
