#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/random.hpp"

using namespace leibform;

TEST_CASE("shorthand rendering") {
    CHECK(format(pf("x1 dx3", 3)) == "1 x1 dx3");
    CHECK(format(pf("-1 dx3", 3)) == "-1 dx3");
    CHECK(format(pf("1/2 x1^2 dx2^dx3 - dx1^dx2", 3)) == "-1 dx1^dx2 + 1/2 x1^2 dx2^dx3");
    CHECK(format(Form<PolyCoeff>(3, 1)) == "0");
    CHECK(format(tv("(1+2i) e[0,0,1] e1 - i e2", 3)) == "(1+2i) e[0,0,1] e1 - i e2");
    CHECK(format(pf("3", 3)) == "3");
}

TEST_CASE("braced grammar") {
    CHECK(pf("2-form{ 1/2 x1^2 dx[2,3]; -1 dx[1,2] }", 3) == pf("1/2 x1^2 dx2^dx3 - dx1^dx2", 3));
    CHECK(tv("1-vec{ 1 e[0,0,1] e[1] }", 3) == tv("e[0,0,1] e1", 3));
    CHECK(pv("0-vec{ 3 }", 3) == pv("3", 3));
    const auto zero = pf("2-form{ }", 3);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 2);
    CHECK(format_full(pf("x1 dx3", 3)) == "1-form{ 1 x1 dx[3] }");
    CHECK(format_full(Form<PolyCoeff>(3, 2)) == "2-form{ }");
}

TEST_CASE("unsorted basis picks up the permutation sign") {
    CHECK(pf("dx2^dx1", 3) == pf("-1 dx1^dx2", 3));
    CHECK(pf("dx3^dx1^dx2", 3) == pf("dx1^dx2^dx3", 3));
    CHECK(pf("dx1^dx1", 3).is_zero());
    CHECK(pf("2-form{ 1 dx[2,1] }", 3) == pf("-1 dx1^dx2", 3));
}

TEST_CASE("format header") {
    CHECK(pf("# format-version: 1\nx1 dx2", 3) == pf("x1 dx2", 3));
    CHECK_THROWS_AS(pf("# format-version: 7\nx1 dx2", 3), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        (void)pf("x1 dx3 + x2 dx3 ? 2", 3);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 16);
        CHECK(std::string(e.what()).find("position 17") != std::string::npos);
    }
    CHECK_THROWS_AS(pf("dx1 + dx1^dx2", 3), ParseError);
    CHECK_THROWS_AS(pf("dx1 e2", 3), ParseError);
    CHECK_THROWS_AS(pf("1-form{ dx[1,2] }", 3), ParseError);
    CHECK_THROWS_AS(pf("dx9", 3), ParseError);
    CHECK_THROWS_AS(pf("", 3), ParseError);
    CHECK_THROWS_AS(pf("x1 x", 3), ParseError);
}

TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(pf("e[1,0,0] dx1", 3), std::invalid_argument);
    CHECK_THROWS_AS(tf("x1 dx1", 3), std::invalid_argument);
    CHECK_THROWS_AS(tf("e[1,0] dx1", 3), std::invalid_argument);
    CHECK_THROWS_AS(pf("i dx1", 3), std::invalid_argument);
    CHECK_THROWS(pf("dx3", 2));
    CHECK_THROWS_AS(pf("e1", 3), std::invalid_argument);
}

TEST_CASE_TEMPLATE("printed values re-parse to equal objects", C, PolyCoeff, TrigCoeff) {
    Rng rng(5);
    RandomCaps caps;
    for (int t = 0; t < 100; ++t) {
        const int n = 3 + static_cast<int>(rng.range(0, 1));
        const int k = static_cast<int>(rng.range(0, n));
        const auto w = random_form<C>(rng, n, k, caps);
        CHECK(parse_form<C>(format(w), n) == w);
        CHECK(parse_form<C>(format_full(w), n) == w);
        CHECK(graded_from_json<C, FormKind>(nlohmann::json::parse(to_json(w).dump())) == w);
        const auto A = random_multivec<C>(rng, n, k, caps);
        CHECK(parse_multivec<C>(format(A), n) == A);
        CHECK(parse_multivec<C>(format_full(A), n) == A);
        CHECK(graded_from_json<C, VecKind>(to_json(A)) == A);
    }
}

TEST_CASE("json mirror fields") {
    const auto j = to_json(pf("1/2 x1 dx2^dx3", 3));
    CHECK(j["format_version"] == 1);
    CHECK(j["dim"] == 3);
    CHECK(j["ring"] == "poly");
    CHECK(j["degree"] == 2);
    CHECK(j["kind"] == "form");
    CHECK(j["terms"][0]["indices"] == nlohmann::json::array({2, 3}));
    CHECK(j["terms"][0]["coeff"] == "1/2 x1");
    nlohmann::json bad = j;
    bad["ring"] = "trig";
    CHECK_THROWS(graded_from_json<PolyCoeff, FormKind>(bad));
}
