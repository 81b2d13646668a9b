#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "linkvol/conway.hpp"
#include "linkvol/diagram.hpp"
#include "linkvol/dilog.hpp"
#include "linkvol/solver.hpp"
#include "linkvol/triangulation.hpp"

using namespace linkvol;
using C = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

VolumeResult vol_of(const char* s) {
    return link_volume(build_diagram(parse(s)));
}
}  // namespace

TEST_CASE("Bloch-Wigner reference values") {
    CHECK(std::abs(bloch_wigner(std::polar(1.0, kPi / 3)) - 1.0149416064) < 1e-9);
    CHECK(bloch_wigner(C(0.37, 0.0)) == 0.0);
    CHECK(bloch_wigner(C(0.62, 0.0)) == 0.0);
    for (C z : {C(0.3, 0.8), C(-1.2, 0.4), C(2.0, 1.3), C(0.5, -0.7)}) {
        CHECK(std::abs(bloch_wigner(std::conj(z)) + bloch_wigner(z)) < 1e-12);
        // five-term-style symmetry D(z) = D(1 - 1/z) = D(1/(1-z))
        CHECK(std::abs(bloch_wigner(z) - bloch_wigner(1.0 - 1.0 / z)) < 1e-12);
        CHECK(std::abs(bloch_wigner(z) - bloch_wigner(1.0 / (1.0 - z))) < 1e-12);
    }
}

TEST_CASE("dilog agrees with the series at small arguments") {
    // Li2(z) = sum z^k/k^2 for |z| < 1
    for (C z : {C(0.2, 0.1), C(-0.3, 0.25), C(0.05, -0.4)}) {
        C s = 0.0;
        C p = z;
        for (int k = 1; k < 60; ++k) {
            s += p / double(k * k);
            p *= z;
        }
        CHECK(std::abs(dilog(z) - s) < 1e-13);
    }
    CHECK(std::abs(dilog(C(1.0, 0.0)).real() - kPi * kPi / 6) < 1e-12);
}

TEST_CASE("census figure-eight solves to the regular shape") {
    const char* census = R"({"tets":2,"gluings":[
        [0,0,1,0,[0,1,3,2]],
        [0,1,1,1,[2,1,0,3]],
        [0,2,1,2,[0,3,2,1]],
        [0,3,1,3,[1,0,2,3]]]})";
    auto tri = orient_canonically(from_json(census));
    auto sol = solve(tri);
    REQUIRE(sol.converged);
    CHECK(sol.residual < 1e-11);
    CHECK(std::abs(sol.volume - 2.0298832128) < 1e-9);
    for (auto z : sol.shapes)
        CHECK(std::abs(z - std::polar(1.0, kPi / 3)) < 1e-9);
}

TEST_CASE("referential volumes") {
    auto w = vol_of("2 1 2");
    REQUIRE(w.status == VolumeResult::Status::Hyperbolic);
    CHECK(std::abs(w.volume - 3.663862377) < 1e-6);

    auto b = vol_of("6*");
    REQUIRE(b.status == VolumeResult::Status::Hyperbolic);
    CHECK(std::abs(b.volume - 7.327724753) < 1e-6);
}

TEST_CASE("golden volumes across symbol classes") {
    struct Row {
        const char* sym;
        double vol;
    };
    const Row rows[] = {
        {"2 2", 2.0298832128},  {"3 2", 2.8281220883},   {"2 2 2", 5.3334895669},
        {"2,2,2", 5.3334895669}, {"2 1 1 2", 5.6930210913}, {"2,2,2+", 7.706911803},
        {".2", 8.997351944},    {"8*2 0", 14.34458139},
    };
    for (const auto& r : rows) {
        auto v = vol_of(r.sym);
        REQUIRE_MESSAGE(v.status == VolumeResult::Status::Hyperbolic, r.sym);
        CHECK_MESSAGE(std::abs(v.volume - r.vol) < 1e-6, r.sym, " got ", v.volume);
    }
}

TEST_CASE("independent residual check on a converged solution") {
    auto d = build_diagram(parse("2 2"));
    auto tri = orient_canonically(octahedral_triangulation(d));
    auto clean = remove_cone_points(tri);
    REQUIRE(clean);
    auto tri2 = orient_canonically(*clean);
    auto sol = solve(tri2);
    REQUIRE(sol.converged);
    CHECK(edge_defect(tri2, sol.shapes) < 1e-10);
}

TEST_CASE("non-hyperbolic inputs are reported, not solved") {
    for (const char* s : {"5", "2,2,-2", "(2,2) -(2,2)", "2"}) {
        auto v = vol_of(s);
        CHECK_MESSAGE(v.status != VolumeResult::Status::Hyperbolic, s);
    }
}

TEST_CASE("mirror invariance of the volume") {
    for (const char* s : {"2 2", "2 1 2", ".2"}) {
        auto v1 = vol_of(s);
        auto sym = mirror(parse(s));
        auto v2 = link_volume(build_diagram(sym));
        REQUIRE(v1.status == VolumeResult::Status::Hyperbolic);
        REQUIRE(v2.status == VolumeResult::Status::Hyperbolic);
        CHECK(std::abs(v1.volume - v2.volume) < 1e-8);
    }
}

TEST_CASE("referential classification") {
    CHECK(classify_referential(7.327724753).value() == "2V1");
    CHECK(classify_referential(14.655449507).value() == "4V1");
    CHECK(classify_referential(2.0298832128).value() == "2V0");
    CHECK_FALSE(classify_referential(5.3334895669).has_value());
    CHECK(referential_value("2V1").value() == doctest::Approx(7.327724754));
    CHECK(referential_value("5.3334895669").value() == doctest::Approx(5.3334895669));
}

TEST_CASE("analytic jacobian matches finite differences") {
    // finite-difference check of the gluing-equation defect around a random
    // nondegenerate point, via the public edge_defect on perturbed shapes
    auto d = build_diagram(parse("2 2"));
    auto tri = orient_canonically(octahedral_triangulation(d));
    auto clean = remove_cone_points(tri);
    REQUIRE(clean);
    auto tri2 = orient_canonically(*clean);
    auto sol = solve(tri2);
    REQUIRE(sol.converged);
    // residual is stationary to first order only at interior optimum of the
    // squared system; here simply verify the defect grows smoothly
    auto shapes = sol.shapes;
    shapes[0] += C(1e-7, -2e-7);
    double d0 = edge_defect(tri2, sol.shapes);
    double d1 = edge_defect(tri2, shapes);
    CHECK(d0 < 1e-10);
    CHECK(d1 < 1e-5);
    CHECK(d1 > d0);
}
