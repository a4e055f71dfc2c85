#include "helpers.hpp"

using namespace nakloc;
using namespace nakloc::test;

TEST_CASE("algebra specs") {
    CHECK(parse_algebra("line:3,2") == build_line(3, 2));
    CHECK(parse_algebra("cycle:6,3") == build_cycle(6, 3));
    CHECK(parse_algebra(" line:3,2 ") == build_line(3, 2));
    auto k = parse_algebra("kupisch:line=2,2,1;cycle=3,3");
    CHECK(k.components().size() == 2);
    CHECK(k.num_vertices() == 5);
    std::string js = R"({"components":[{"shape":"line","kupisch":[2,2,1]}]})";
    CHECK(parse_algebra(js) == build_line(3, 2));
}

TEST_CASE("algebra round trips") {
    for (const auto& b : small_battery()) {
        CHECK(parse_algebra(algebra_spec(b)) == b);
        CHECK(algebra_from_json(algebra_json(b)) == b);
        CHECK(parse_algebra(algebra_json(b).dump()) == b);
    }
}

TEST_CASE("malformed algebra specs report a position") {
    try {
        parse_algebra("line:3;2");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 6);
    }
    CHECK_THROWS_AS(parse_algebra("tree:3,2"), ParseError);
    CHECK_THROWS_AS(parse_algebra("line:3,2x"), ParseError);
    CHECK_THROWS_AS(parse_algebra("{\"components\":"), ParseError);
    std::string star = R"({"components":[{"shape":"star","kupisch":[1]}]})";
    CHECK_THROWS_AS(parse_algebra(star), ParseError);
    CHECK_THROWS_AS(parse_algebra("kupisch:line=3,1,1"), InvalidKupisch);
}

TEST_CASE("module specs") {
    auto a = build_line(3, 2);
    CHECK(parse_module(a, "M(2,1)") == a.simple(1));
    CHECK(parse_module(a, "P1") == a.projective(0));
    CHECK(parse_module(a, "S3") == Indec{2, 1});
    CHECK(parse_module_list(a, "P2+S1") == ModuleList{{0, 1}, {1, 2}});
    CHECK(parse_module_list(a, "").empty());
    CHECK_THROWS_AS(parse_module(a, "S4"), ParseError);
    CHECK_THROWS_AS(parse_module(a, "M(1,3)"), ParseError);
    CHECK_THROWS_AS(parse_module(a, "Q1"), ParseError);
    CHECK_THROWS_AS(parse_module_list(a, "S1,"), ParseError);
}

TEST_CASE("names") {
    auto a = build_line(3, 2);
    CHECK(literal(Indec{1, 2}) == "M(2,2)");
    CHECK(short_name(a, Indec{1, 2}) == "P2");
    CHECK(short_name(a, Indec{2, 1}) == "P3");
    CHECK(short_name(a, Indec{1, 1}) == "S2");
    auto c = build_cycle(3, 3);
    CHECK(short_name(c, Indec{0, 2}) == "M(1,2)");
    CHECK(sum_name(a, mods(a, "P1,P3,S1")) == "P1+P3+S1");
    CHECK(sum_name(a, {}) == "0");
    CHECK(set_name(a, {}) == "{0}");
    CHECK(set_name(a, mods(a, "P1,S1")) == "{P1,S1}");
    CHECK(vertex_set_name({0, 2}) == "{1,3}");
}

TEST_CASE("module json") {
    auto a = build_cycle(3, 3);
    for (const auto& x : list_indecomposables(a)) CHECK(module_from_json(a, module_json(x)) == x);
    auto expected = json::array({"M(1,1)", "M(2,3)"});
    CHECK(literals_json(mods(a, "S1,P2")) == expected);
}
