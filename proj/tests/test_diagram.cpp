#include <doctest.h>

#include "linkvol/conway.hpp"
#include "linkvol/diagram.hpp"
#include "linkvol/tables.hpp"

using namespace linkvol;

namespace {
int comps(const char* s) { return component_count(build_diagram(parse(s))); }
}

TEST_CASE("crossing numbers carry over to the diagram") {
    for (const char* s : {"2 2", "2 1 2", "6*", "8*2 0.2 0", ".2", "2,2,2+"}) {
        auto sym = parse(s);
        auto d = build_diagram(sym);
        CHECK(d.crossing_count() == crossing_count(sym));
    }
}

TEST_CASE("component counts match the classical names") {
    CHECK(comps("2 2") == 1);      // 4_1
    CHECK(comps("2 1 2") == 2);    // 5_1^2
    CHECK(comps("2,2,2") == 3);    // 6_1^3
    CHECK(comps("6*") == 3);       // Borromean rings
    CHECK(comps("(2,2) (2,2)") == 3);  // 8_4^3
    CHECK(comps(".2") == 2);       // 7_6^2
    CHECK(comps("8*2") == 2);      // 9_42^2
    CHECK(comps("8*2 0") == 1);    // 9_34
    CHECK(comps("8*-2 0") == 1);   // 9_47
    CHECK(comps("2,2,2+") == 3);   // 7_1^3
    CHECK(comps("2 1,2,2") == 2);  // 7_5^2
    CHECK(comps(".2 1") == 2);     // 8_13^2
    CHECK(comps("2:2:2") == 2);    // 9_40^2
    CHECK(comps("2 0:2 0:2 0") == 1);  // 9_41
    CHECK(comps(".(2,2)") == 3);   // 9_12^3
    CHECK(comps(".2.2") == 1);     // 8_17
    CHECK(comps("3") == 1);
    CHECK(comps("2") == 2);  // Hopf link
}

TEST_CASE("closure of small tangles") {
    auto hopf = build_diagram(parse("2"));
    CHECK(hopf.crossing_count() == 2);
    CHECK(component_count(hopf) == 2);
    auto trefoil = build_diagram(parse("3"));
    CHECK(component_count(trefoil) == 1);
}

TEST_CASE("diagram validation") {
    for (const char* s : {"2 2", "6*", "8*2 0.2 0", "2,2,-2", "(2,2) -(2,2)"}) {
        auto d = build_diagram(parse(s));
        auto diag = validate(d);
        CHECK(diag.ok());
        CHECK(static_cast<int>(faces(d).size()) == d.crossing_count() + 2);
    }
}

TEST_CASE("mirror flips all crossing signs") {
    for (const char* s : {"2 2", "2 1 2", "8*2 0.2 0", "2,2,-2"}) {
        auto sym = parse(s);
        auto d1 = build_diagram(sym);
        auto d2 = build_diagram(mirror(sym));
        auto s1 = crossing_signs(d1);
        auto s2 = crossing_signs(d2);
        REQUIRE(s1.size() == s2.size());
        int sum1 = 0, sum2 = 0;
        for (std::size_t i = 0; i < s1.size(); ++i) {
            sum1 += s1[i];
            sum2 += s2[i];
        }
        CHECK(sum1 == -sum2);  // writhe negates under mirror
    }
}

TEST_CASE("whole table builds valid diagrams") {
    for (const auto& row : bounds_table()) {
        auto d = build_diagram(parse(row.source));
        auto diag = validate(d);
        CHECK(diag.ok());
        CHECK(d.crossing_count() == crossing_count(parse(row.source)));
    }
}

TEST_CASE("pd json shape") {
    auto d = build_diagram(parse("2 2"));
    auto js = pd_json(d);
    CHECK(js.find("\"crossings\"") != std::string::npos);
    CHECK(js.find("\"signs\"") != std::string::npos);
}
