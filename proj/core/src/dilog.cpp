#include "linkvol/dilog.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace linkvol {

namespace {

constexpr double kPi = std::numbers::pi;

// Bernoulli numbers B_0..B_22 (odd ones beyond B_1 vanish)
constexpr std::array<double, 23> kBernoulli = {
    1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30, 0.0,
    5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0, -3617.0 / 510, 0.0,
    43867.0 / 798, 0.0, -174611.0 / 330, 0.0, 854513.0 / 138};

}  // namespace

std::complex<double> dilog(std::complex<double> z) {
    using C = std::complex<double>;
    if (z == C(0.0, 0.0)) return 0.0;
    if (z == C(1.0, 0.0)) return kPi * kPi / 6.0;
    C pref = 0.0;
    double sgn = 1.0;
    if (std::abs(z) > 1.0) {
        C lz = std::log(-z);
        pref += -kPi * kPi / 6.0 - 0.5 * lz * lz;
        z = 1.0 / z;
        sgn = -1.0;
    }
    if (z.real() > 0.5) {
        C lz = std::log(z);
        C l1z = std::log(1.0 - z);
        pref += sgn * (kPi * kPi / 6.0 - lz * l1z);
        z = 1.0 - z;
        sgn = -sgn;
    }
    // series in u = -log(1-z):  Li2(z) = sum_n B_n u^{n+1}/(n+1)!
    C u = -std::log(1.0 - z);
    C s = 0.0;
    C term = u;
    for (std::size_t n = 0; n < kBernoulli.size(); ++n) {
        if (kBernoulli[n] != 0.0) s += kBernoulli[n] * term;
        term = term * u / static_cast<double>(n + 2);
    }
    return pref + sgn * s;
}

double bloch_wigner(std::complex<double> z) {
    if (z.imag() == 0.0) return 0.0;
    return dilog(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

}  // namespace linkvol
