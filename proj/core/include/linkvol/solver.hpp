#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "linkvol/triangulation.hpp"

namespace linkvol {

struct SolverOptions {
    double tolerance = 1e-11;
    int max_iterations = 100;
    int max_halvings = 25;
    int restarts = 14;
    unsigned seed = 0;
};

struct ShapeSolution {
    std::vector<std::complex<double>> shapes;   // one per tetrahedron
    double residual = 0.0;                      // max |edge defect|
    double completeness_defect = 0.0;           // max cusp-cycle defect
    std::vector<int> orientation_signs;         // sign(Im z), 0 when flat
    bool converged = false;
    int flat_tets = 0;
    double volume = 0.0;                        // sum of Bloch-Wigner values
};

struct ReferentialConstants {
    static constexpr double V0 = 1.0149416064;  // ideal regular tetrahedron
    static constexpr double V1 = 3.663862377;   // Whitehead link 2 1 2
    static constexpr double V2 = 7.327724753;   // Borromean rings 6*
};

// Solve Thurston's gluing equations (log form, every edge angle sum 2*pi)
// plus completeness for a rank-spanning set of cusp cycles, by damped
// least-squares Newton with random restarts; all remaining cusp-torus
// cycles are verified parabolic afterwards. The triangulation must have
// every vertex link a torus.
ShapeSolution solve(const IdealTriangulation& tri, const SolverOptions& opts = {});

// Referential classification m*V0 or m*V1 (m <= 8) within tol.
std::optional<std::string> classify_referential(double volume, double tol = 1e-6);
std::optional<double> referential_value(const std::string& expr);

// Evaluates the gluing-equation defect at given shapes (independent check).
double edge_defect(const IdealTriangulation& tri,
                   const std::vector<std::complex<double>>& shapes);

// Full pipeline: symbol-level volume with cone-point removal and
// non-hyperbolicity detection.
struct VolumeResult {
    enum class Status { Hyperbolic, NotHyperbolic, NoConvergence } status;
    double volume = 0.0;
    ShapeSolution solution;
    int tetrahedra = 0;
    std::string detail;
};

VolumeResult link_volume(const LinkDiagram& d, const SolverOptions& opts = {});

}  // namespace linkvol
