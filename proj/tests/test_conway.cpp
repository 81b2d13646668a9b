#include <doctest.h>

#include "linkvol/conway.hpp"
#include "linkvol/tables.hpp"

using namespace linkvol;

TEST_CASE("round trips on simple symbols") {
    CHECK(canonical("2 2") == "2 2");
    CHECK(canonical("(2,2) (2,2)") == "(2,2) (2,2)");
    CHECK(canonical("8*(2,-2).(2,-2)") == "8*(2,-2).(2,-2)");
    CHECK(canonical("2,2,-2") == "2,2,-2");
    CHECK(canonical("8*2 0.2 0") == "8*2 0.2 0");
    CHECK(canonical("2,2,2+") == "2,2,2+");
    CHECK(canonical("2 1,2,2++") == "2 1,2,2++");
    CHECK(canonical("(2,2) -(2,2)") == "(2,2) -(2,2)");
    CHECK(canonical("10*2 0::.2 0") == "10*2 0::.2 0");
    CHECK(canonical(".(2,-2)") == ".(2,-2)");
    CHECK(canonical("-2 0:-2 0:-2 0") == "-2 0:-2 0:-2 0");
    CHECK(canonical(".2:2") == ".2:2");
    CHECK(canonical("6*2") == "6*2");
}

TEST_CASE("parse-print reproduces every bounds-table source symbol") {
    for (const auto& row : bounds_table()) {
        CHECK(canonical(row.source) == row.source);
        CHECK(canonical(canonical(row.source)) == canonical(row.source));
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("2 ("), parse_error);
    CHECK_THROWS_AS(parse("99*2"), parse_error);
    CHECK_THROWS_AS(parse("6*2.2.2.2.2.2.2"), parse_error);  // vertex overflow
}

TEST_CASE("structure of parsed symbols") {
    auto s = parse("2 2");
    REQUIRE(s.root);
    auto* p = std::get_if<Product>(&s.root->node);
    REQUIRE(p);
    CHECK(p->factors.size() == 2);

    auto poly = parse("8*2 0.2 0");
    REQUIRE(poly.basis);
    CHECK(*poly.basis == "8*");
    CHECK(poly.fills.size() == 8);
    CHECK(poly.fills[0]);
    CHECK(poly.fills[1]);
    CHECK_FALSE(poly.fills[2]);

    auto ram = parse("2,2,-2");
    auto* r = std::get_if<Ramification>(&ram.root->node);
    REQUIRE(r);
    CHECK(r->terms.size() == 3);
}

TEST_CASE("placeholder zeros preserved") {
    CHECK(canonical("2 0") == "2 0");
    auto s = parse("8*2 0");
    CHECK(print(s) == "8*2 0");
}

TEST_CASE("mirror is an involution and negates chains") {
    CHECK(print(mirror(parse("2 2"))) == "-2 -2");
    CHECK(print(mirror(parse("2,2,-2"))) == "-2,-2,2");
    CHECK(print(mirror(parse("8*2 0.-2 0"))) == "8*-2 0.2 0");
    for (const char* s : {"2 2", "2,2,-2", "8*2 0.2 0", "(2,2) -(2,2)", ".2 1"}) {
        auto sym = parse(s);
        CHECK(print(mirror(mirror(sym))) == print(sym));
        CHECK(crossing_count(mirror(sym)) == crossing_count(sym));
    }
}

TEST_CASE("crossing counts") {
    CHECK(crossing_count(parse("2 2")) == 4);
    CHECK(crossing_count(parse("6*")) == 6);
    CHECK(crossing_count(parse("8*2 0.2 0")) == 10);
    CHECK(crossing_count(parse(".2")) == 7);
    CHECK(crossing_count(parse("2:2:2")) == 9);
    CHECK(crossing_count(parse("2,2,2+")) == 7);
    CHECK(crossing_count(parse("9*1 0.-1.-1.2 0.-1.-1:-1.-1")) == 10);
}

TEST_CASE("family templates in the table parse after parameter substitution") {
    for (const auto& row : bounds_table()) {
        // crossing count of the source equals the family at base offsets
        auto sym = parse(row.source);
        CHECK(crossing_count(sym) >= 4);
    }
}
