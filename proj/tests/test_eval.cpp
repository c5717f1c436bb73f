#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/eval.hpp"
#include "leibform/random.hpp"

using namespace leibform;

namespace {

std::string ev(const std::string& e) { return eval_expr(e).text; }

}  // namespace

TEST_CASE("documented examples") {
    CHECK(ev("bracket(x1 dx3, x2 dx3) @ poly n=3") == "-1 dx3");
    CHECK(ev("lich(dx1^dx2; e[0,0,1] e1; e[0,0,-1] e2) @ trig n=3") == "1");
    CHECK(ev("d(dx1)") == "0");
}

TEST_CASE("ring and dimension inference") {
    const EvalResult r = eval_expr("d(e[0,0,1] dx2)");
    CHECK(r.ring == "trig");
    CHECK(r.n == 3);
    CHECK(r.text == "-1 e[0,0,1] dx2^dx3");
    CHECK(eval_expr("d(x1 dx2)").n == 2);
    CHECK(eval_expr("d(x1 dx2) @ n=4").n == 4);
    CHECK(eval_expr("d(x1 dx2)", EvalOptions{"", 5}).n == 5);
    CHECK_THROWS_AS(eval_expr("d(x3 dx2) @ n=2"), EvalError);
}

TEST_CASE("operations") {
    CHECK(ev("Xfield(x1 dx3)") == "-1 e2");
    CHECK(ev("flat(e1^e2) @ n=3") == "1 dx3");
    CHECK(ev("sharp(dx3) @ n=3") == "1 e1^e2");
    CHECK(ev("iota(e1^e2, dx1^dx2^dx3)") == "1 dx3");
    CHECK(ev("delta(x2 e1^e2) @ n=3") == "1 e1");
    CHECK(ev("div(x1 e1)") == "1");
    CHECK(ev("bracket(e1, x1 e2)") == "1 e2");
    CHECK(ev("wedge(dx2, dx1)") == "-1 dx1^dx2");
    CHECK(ev("lie(e1, x1 dx2)") == "1 dx2");
    CHECK(ev("potential(e[1,0,0] e2)") == "-1 e[1,0,0] dx3");
    CHECK(ev("normal(e[1,0,0] dx1) @ trig n=3") == "0");
    CHECK(ev("normal(dx1 + e[1,0,0] dx1) @ trig n=3") == "1 dx1");
    CHECK(ev("cbracket(-1 e[0,0,1] dx2; potential(e[0,0,-1] e2))") == "-1 dx3");
    CHECK(ev("cycle(x1=x2=0; e[0,0,1] e1; e[0,0,-1] e2)") == "-1");
    CHECK(ev("cocycle(dx1^dx2; -1 e[0,0,1] dx2; potential(e[0,0,-1] e2))") == "1; 1");
    // nested calls
    CHECK(ev("d(bracket(x1 dx3, x2 dx3))") == "0");
    CHECK(ev("Xfield(bracket(x1 dx3, x2 dx3))") == "0");
}

TEST_CASE("json-valued operations") {
    const auto w = nlohmann::json::parse(ev("decompose(x1 e2^e3)"));
    CHECK(w["verified"] == true);
    CHECK(w["count"] == 1);
    const auto s = nlohmann::json::parse(ev("squares(x3) @ n=3"));
    CHECK(s["potentials"][0]["alpha"] == "1 x1 x3 dx2 + 1 dx3");
    const auto f = nlohmann::json::parse(ev(
        R"(factor({"k":1,"n":2,"terms":[{"I":[2],"sigma":[1,0],"value":["1"]},{"I":[1],"sigma":[0,1],"value":"-1"}]}))"));
    CHECK(f["verified"] == true);
    CHECK(f["Q"]["terms"].size() == 1);
}

TEST_CASE("parse errors carry positions") {
    try {
        ev("bracket(x1 dx3, x2 d#x3)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 19);
    }
    CHECK_THROWS_AS(ev("bracket(x1 dx3, x2 dx3"), ParseError);
    CHECK_THROWS_AS(ev("brackt(x1 dx3, x2 dx3)"), ParseError);
    CHECK_THROWS_AS(ev("d(dx1) @ real"), ParseError);
    CHECK_THROWS_AS(ev("d(dx1) extra"), ParseError);
}

TEST_CASE("semantic errors name the operation") {
    auto message = [](const std::string& e) {
        try {
            ev(e);
        } catch (const EvalError& err) {
            return std::string(err.what());
        }
        return std::string();
    };
    CHECK(message("bracket(x1 dx3)").rfind("bracket:", 0) == 0);
    CHECK(message("Xfield(dx1^dx2) @ n=3").rfind("Xfield:", 0) == 0);
    CHECK(message("lich(dx1^dx2; e1; e2) @ poly n=3").rfind("lich:", 0) == 0);
    CHECK(message("decompose(e[1,0,0] e1^e2)").rfind("decompose:", 0) == 0);
    CHECK(message("iota(dx1, dx2)").rfind("iota:", 0) == 0);
}

TEST_CASE("printed values re-parse to equal objects") {
    Rng rng(31);
    RandomCaps caps;
    for (int t = 0; t < 30; ++t) {
        const int n = 3 + t % 2;
        const PForm a = random_form<PolyCoeff>(rng, n, n - 2, caps), b = random_form<PolyCoeff>(rng, n, n - 2, caps);
        const std::string expr = "bracket(" + format(a) + "; " + format(b) + ") @ poly n=" + std::to_string(n);
        const std::string out = ev(expr);
        INFO(expr, " -> ", out);
        // a bare "0" carries no degree
        const PForm want = leibniz_bracket(a, b);
        if (want.is_zero())
            CHECK(out == "0");
        else
            CHECK(pf(out, n) == want);
        const TForm x = random_form<TrigCoeff>(rng, n, 1, caps);
        CHECK(tf(ev("d(" + format(x) + ") @ trig n=" + std::to_string(n)), n) == d(x));
    }
}

TEST_CASE("operator JSON round trip") {
    Rng rng(32);
    RandomCaps caps;
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 2;
        const DiffOp D = random_diffop(rng, n, static_cast<int>(rng.range(0, n)), 2, 3, caps);
        CHECK(diffop_from_json(nlohmann::json::parse(diffop_to_json(D).dump())) == D);
    }
    CHECK_THROWS(diffop_from_json(nlohmann::json::parse(R"({"k":1,"n":2,"terms":[{"I":[1,2],"sigma":[0,0],"value":"1"}]})")));
    CHECK_THROWS(diffop_from_json(nlohmann::json::parse(R"({"k":1,"n":2,"terms":[{"I":[1],"sigma":[0],"value":"1"}]})")));
}
