#pragma once

#include <string>
#include <vector>

namespace linkvol {

struct FitPoint {
    double x;
    double v;
};

// Interpolation models for volume sequences:
//   rational_even:  (sum a_i x^{2i}) / (sum b_i x^{2i}) + c, gauge b_n = 1
//   inverse_even:   a_0 + sum_{i>=1} a_i / (x + c)^{2i}
struct RationalFitModel {
    enum class Kind { RationalEven, InverseEven } kind;
    int n = 4;
    std::vector<double> a;
    std::vector<double> b;  // rational_even only, b.back() == 1
    double c = 0.0;
    double max_residual = 0.0;
    bool converged = false;

    double eval(double x) const;
};

RationalFitModel fit_rational(const std::vector<FitPoint>& pts, int n,
                              unsigned seed = 0);
RationalFitModel fit_inverse(const std::vector<FitPoint>& pts, int n);

double asymptote(const RationalFitModel& m);

// Predicted limit (n_chains - 1) * V2 for chains p ... p families.
double multi_chain_limit(int n_chains);

}  // namespace linkvol
