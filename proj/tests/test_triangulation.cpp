#include <doctest.h>

#include "linkvol/conway.hpp"
#include "linkvol/diagram.hpp"
#include "linkvol/triangulation.hpp"

using namespace linkvol;

TEST_CASE("octahedral complex counts") {
    for (const char* s : {"2 2", "2 1 2", "6*", "2,2,-2"}) {
        auto sym = parse(s);
        auto d = build_diagram(sym);
        auto tri = octahedral_triangulation(d);
        int n = d.crossing_count();
        auto info = inspect(tri);
        CHECK(info.ok());
        CHECK(info.tets == 4 * n);
        CHECK(info.edge_classes == 4 * n + 2);  // two cone points
        CHECK(info.cone_points == 2);
        CHECK(info.cusps == component_count(d));
    }
    CHECK(inspect(octahedral_triangulation(build_diagram(parse("2 2")))).tets == 16);
    CHECK(inspect(octahedral_triangulation(build_diagram(parse("6*")))).tets == 24);
}

TEST_CASE("one-crossing diagrams are rejected") {
    LinkDiagram d;
    // a single kink: one crossing, arcs repeat
    d.crossings.push_back({{0, 0, 1, 1}, true});
    CHECK_THROWS(octahedral_triangulation(d));
}

TEST_CASE("cone point removal yields edge classes == tetrahedra") {
    for (const char* s : {"2 2", "3 2", "2 1 2", "6*", "2,2,2"}) {
        auto d = build_diagram(parse(s));
        auto tri = orient_canonically(octahedral_triangulation(d));
        auto clean = remove_cone_points(tri);
        REQUIRE_MESSAGE(clean.has_value(), s);
        auto info = inspect(*clean);
        CHECK(info.ok());
        CHECK(info.cone_points == 0);
        CHECK(info.edge_classes == info.tets);
        CHECK(info.cusps == component_count(d));
        for (int chi : info.link_chis) CHECK(chi == 0);
    }
}

TEST_CASE("json round trip") {
    auto tri = octahedral_triangulation(build_diagram(parse("2 2")));
    auto js = to_json(tri);
    auto back = from_json(js);
    CHECK(back.ntets == tri.ntets);
    CHECK(to_json(back) == js);
    CHECK(inspect(back).ok());
}

TEST_CASE("malformed gluing rejected") {
    // double-glued face
    CHECK_THROWS(from_json(R"({"tets":2,"gluings":[[0,0,1,0,[0,1,2,3]],[0,0,1,1,[1,0,2,3]]]})"));
    // unglued faces
    CHECK_THROWS(from_json(R"({"tets":2,"gluings":[[0,0,1,0,[0,1,2,3]]]})"));
}

TEST_CASE("census figure-eight file imports cleanly") {
    // the standard 2-tetrahedron gluing of the figure-eight complement
    const char* census = R"({"tets":2,"gluings":[
        [0,0,1,0,[0,1,3,2]],
        [0,1,1,1,[2,1,0,3]],
        [0,2,1,2,[0,3,2,1]],
        [0,3,1,3,[1,0,2,3]]]})";
    auto tri = from_json(census);
    auto info = inspect(tri);
    CHECK(info.ok());
    CHECK(info.tets == 2);
    CHECK(info.edge_classes == 2);
    CHECK(info.cusps == 1);
    CHECK(info.cone_points == 0);
}
