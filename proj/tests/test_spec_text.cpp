#include "ewb/catalog.hpp"
#include "ewb/error.hpp"
#include "ewb/spec_text.hpp"

#include <doctest.h>

using namespace ewb;

TEST_SUITE_BEGIN("spec-text");

TEST_CASE("parse a simple permutation spec") {
    GroupSpecAst ast = parse_group_spec(
        "group S3\nkind permutation degree 3\ngen s = (1 2)\ngen r = (1 2 3)\nend\n");
    CHECK(ast.name == "S3");
    CHECK(ast.kind == GroupSpecAst::Kind::Permutation);
    CHECK(ast.degree == 3);
    REQUIRE(ast.gens.size() == 2);
    CHECK(ast.gens[0].name == "s");
    CHECK(ast.gens[1].cycles.size() == 1);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_group_spec("group X\nkind permutation degree 3\ngen a = (1 2\nend\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_group_spec("group X\nkind permutation degree 3\ngen a = (1 9)\nend\n"),
                    Error); // point out of range
    CHECK_THROWS_AS(parse_group_spec("group X\nkind permutation degree 3\ngen a = (1 1)\nend\n"),
                    Error); // repeated point
    CHECK_THROWS_AS(parse_group_spec("group X\nkind permutation degree 3\ngen a = (1 2)\n"),
                    Error); // missing end
    CHECK_THROWS_AS(
        parse_group_spec("group X\nkind permutation degree 3\ngen a = (1 2)\nend\nxx\n"),
        Error); // trailing content
    CHECK_THROWS_AS(parse_group_spec("group X\nkind tabel order 3\ngen a = 0 1 2\nend\n"),
                    Error); // bad kind
}

TEST_CASE("identity permutation is written ()") {
    GroupSpecAst ast =
        parse_group_spec("group T\nkind permutation degree 2\ngen e = ()\nend\n");
    CHECK(ast.gens[0].cycles.empty());
    GroupPtr g = realize_group(ast);
    CHECK(g->order == 1);
}

TEST_CASE("canonical print is a fixed point of parse on the whole catalog") {
    for (const auto& e : catalog_entries()) {
        CAPTURE(e.name);
        GroupSpecAst ast = parse_group_spec(e.group_text);
        std::string printed = print_group_spec(ast);
        CHECK(printed == e.group_text);
        CHECK(print_group_spec(parse_group_spec(printed)) == printed);
    }
    for (const auto& a : catalog_action_entries()) {
        CAPTURE(a.name);
        ActionSpecAst ast = parse_action_spec(a.text);
        std::string printed = print_action_spec(ast);
        CHECK(printed == a.text);
        CHECK(print_action_spec(parse_action_spec(printed)) == printed);
    }
}

TEST_CASE("table kind round trips and realizes") {
    const char* text = "group C4t\nkind table order 4\ngen g = 1 2 3 0\nend\n";
    GroupSpecAst ast = parse_group_spec(text);
    CHECK(ast.kind == GroupSpecAst::Kind::Table);
    CHECK(print_group_spec(ast) == text);
    GroupPtr g = realize_group(ast);
    CHECK(g->order == 4);
    CHECK(g->element_order(1) == 4);
}

TEST_CASE("table rows must be permutations") {
    CHECK_THROWS_AS(load_group("group B\nkind table order 3\ngen g = 1 1 2\nend\n"), Error);
}

TEST_CASE("action spec parsing") {
    ActionSpecAst ast = parse_action_spec(
        "action k on C3xC3\nactor V4\nauto u: u -> u^-1\nauto v: v -> v^-1\nend\n");
    CHECK(ast.name == "k");
    CHECK(ast.group_name == "C3xC3");
    CHECK(ast.actor_name == "V4");
    REQUIRE(ast.autos.size() == 2);
    CHECK(ast.autos[0].actor_gen == "u");
    REQUIRE(ast.autos[0].images.size() == 1);
    CHECK(ast.autos[0].images[0].second.factors ==
          std::vector<std::pair<std::string, int>>{{"u", -1}});
    CHECK_THROWS_AS(parse_action_spec("action k on G\nend\n"), Error);
    CHECK_THROWS_AS(
        parse_action_spec("action k on G\nactor A\nauto a: x -> y^z\nend\n"), Error);
}

TEST_SUITE_END();
