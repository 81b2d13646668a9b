#pragma once

#include <complex>

namespace linkvol {

// Complex dilogarithm Li_2(z), double precision.
std::complex<double> dilog(std::complex<double> z);

// Bloch-Wigner function D(z) = Im Li_2(z) + arg(1-z) log|z|; the hyperbolic
// volume of the ideal tetrahedron with shape z. Zero on the real line.
double bloch_wigner(std::complex<double> z);

}  // namespace linkvol
