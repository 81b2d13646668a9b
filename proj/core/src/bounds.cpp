#include "linkvol/bounds.hpp"

#include <cmath>

#include "linkvol/diagram.hpp"

namespace linkvol {

VolumeFn default_volume_fn(const SolverOptions& opts) {
    return [opts](const ConwaySymbol& sym) {
        return link_volume(build_diagram(sym), opts);
    };
}

namespace {

double vol_or_zero(const VolumeResult& r, bool* hyperbolic, bool* converged) {
    if (hyperbolic) *hyperbolic = r.status == VolumeResult::Status::Hyperbolic;
    if (converged) *converged = r.status != VolumeResult::Status::NoConvergence;
    if (r.status == VolumeResult::Status::Hyperbolic) return r.volume;
    return 0.0;
}

}  // namespace

BoundsReport bounds(const FamilySpec& spec, const VolumeFn& vol) {
    BoundsReport rep;
    rep.family_text = spec.text;
    ConwaySymbol src = source_link(spec.base_symbol);
    rep.source_symbol = print(src);
    auto aug = complete_augmentation(spec.base_symbol);
    rep.augmented_symbol = print(aug.symbol);
    rep.augmentation_mirrored = aug.mirrored;
    if (aug.has_negative_chains)
        rep.flags.push_back("augmentation kept negative chains; upper bound unverified");
    if (parameters(spec.base_symbol).size() < 2 && !spec.base_symbol.basis)
        rep.flags.push_back("fewer than two chains; Theorem 1 precondition not met");

    auto lr = vol(src);
    bool hyp = false, conv = false;
    rep.lower = vol_or_zero(lr, &hyp, &conv);
    rep.source_hyperbolic = hyp;
    rep.lower_ok = conv || lr.status == VolumeResult::Status::NoConvergence;
    if (lr.status == VolumeResult::Status::NoConvergence) {
        // paper convention: non-hyperbolic source links get lower bound 0
        rep.lower = 0.0;
        rep.source_hyperbolic = false;
        rep.flags.push_back("source link reported non-hyperbolic (lower bound 0)");
    }

    auto ur = vol(aug.symbol);
    if (ur.status == VolumeResult::Status::Hyperbolic) {
        rep.upper = ur.volume;
        rep.upper_ok = true;
    } else {
        rep.flags.push_back("augmented link volume unavailable");
    }
    rep.lower_expr = classify_referential(rep.lower);
    rep.upper_expr = classify_referential(rep.upper);
    return rep;
}

SubfamilyBound subfamily_bounds(const FamilySpec& spec, const ParameterAssignment& fixed,
                                const std::string& varying, const VolumeFn& vol) {
    SubfamilyBound out;
    out.fixed = fixed;
    ParameterAssignment at0 = fixed;
    at0[varying] = 0;
    ConwaySymbol lower_sym = instantiate(spec, at0);
    out.lower_symbol = print(lower_sym);

    // p_k-augmented symbol with the others fixed
    ConwaySymbol inst = instantiate(spec, at0);
    // find the varying parameter's position
    const FamilyParameter* vp = nullptr;
    for (const auto& p : spec.params)
        if (p.name == varying) vp = &p;
    if (!vp) throw std::runtime_error("unknown varying parameter " + varying);
    ConwaySymbol aug = augment(inst, vp->pos);
    out.upper_symbol = print(aug);

    auto lr = vol(lower_sym);
    auto ur = vol(aug);
    if (lr.status == VolumeResult::Status::Hyperbolic) out.lower = lr.volume;
    if (ur.status == VolumeResult::Status::Hyperbolic) out.upper = ur.volume;
    out.ok = lr.status == VolumeResult::Status::Hyperbolic &&
             ur.status == VolumeResult::Status::Hyperbolic;
    return out;
}

SandwichCheck verify_sandwich(const FamilySpec& spec, const std::vector<SweepRange>& ranges,
                              const VolumeFn& vol) {
    SandwichCheck out;
    auto rep = bounds(spec, vol);
    if (!rep.source_hyperbolic) {
        out.applicable = false;
        return out;
    }
    auto items = sweep(spec, ranges);
    out.holds = true;
    std::map<std::string, double> vols;
    for (const auto& [asn, sym] : items) {
        auto r = vol(sym);
        if (r.status != VolumeResult::Status::Hyperbolic) {
            out.holds = false;
            out.counterexamples.push_back(print(sym) + ": not hyperbolic");
            continue;
        }
        std::string key;
        for (const auto& [k, v] : asn) key += k + "=" + std::to_string(v) + " ";
        vols[key] = r.volume;
        if (rep.lower_ok && r.volume < rep.lower - 1e-8) {
            out.holds = false;
            out.counterexamples.push_back(print(sym) + ": below lower bound");
        }
        if (rep.upper_ok && r.volume > rep.upper + 1e-8) {
            out.holds = false;
            out.counterexamples.push_back(print(sym) + ": above upper bound");
        }
    }
    // monotonicity in each parameter
    for (const auto& [asn, sym] : items) {
        for (const auto& r : ranges) {
            auto next = asn;
            auto it = next.find(r.name);
            if (it == next.end()) continue;
            ++it->second;
            if (it->second > r.hi) continue;
            ConwaySymbol s2 = instantiate(spec, next);
            auto v1 = vol(sym);
            auto v2 = vol(s2);
            if (v1.status != VolumeResult::Status::Hyperbolic ||
                v2.status != VolumeResult::Status::Hyperbolic)
                continue;
            if (!(v2.volume > v1.volume + 1e-9)) {
                out.holds = false;
                out.counterexamples.push_back("monotonicity fails " + print(sym) + " -> " +
                                              print(s2));
            }
        }
    }
    return out;
}

std::vector<TableRow> bounds_rows(const std::vector<FamilySpec>& specs, const VolumeFn& vol) {
    std::vector<TableRow> out;
    for (const auto& spec : specs) {
        auto rep = bounds(spec, vol);
        TableRow row;
        row.family = spec.text;
        row.source = rep.source_symbol;
        row.lower = rep.lower;
        row.upper = rep.upper;
        row.lower_cell = rep.lower_expr.value_or("");
        row.upper_cell = rep.upper_expr.value_or("");
        out.push_back(row);
    }
    return out;
}

}  // namespace linkvol
