#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leibform/verify.hpp"

using namespace leibform;

TEST_CASE("suite streams are independent") {
    CHECK(suite_seed(1, "cartan") != suite_seed(1, "leibniz"));
    CHECK(suite_seed(1, "cartan") != suite_seed(2, "cartan"));
    CHECK(suite_seed(7, "torus") == suite_seed(7, "torus"));

    VerifyConfig one;
    one.suites = {"perfect"};
    VerifyConfig two;
    two.suites = {"squares", "perfect"};
    const Report a = run_suites(one), b = run_suites(two);
    REQUIRE(b.suites.size() == 2);
    CHECK(b.suites[0].name == "perfect");  // registry order, not argument order
    CHECK(report_json(a)["suites"][0] == report_json(b)["suites"][0]);
}

TEST_CASE("reports are deterministic and untimed by default") {
    VerifyConfig c;
    c.suites = {"squares", "ophom"};
    const std::string x = report_json(run_suites(c)).dump(), y = report_json(run_suites(c)).dump();
    CHECK(x == y);
    CHECK(x.find("seconds") == std::string::npos);
    CHECK(report_tsv(run_suites(c)).rfind("# format-version: 1\n", 0) == 0);
    c.timing = true;
    CHECK(report_json(run_suites(c)).dump().find("seconds") != std::string::npos);
}

TEST_CASE("configuration is validated") {
    VerifyConfig c;
    c.ring = "real";
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = VerifyConfig{};
    c.suites = {"nope"};
    CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
    c = VerifyConfig{};
    c.n = 2;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = VerifyConfig{};
    c.caps.max_terms = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    CHECK_NOTHROW(validate(VerifyConfig{}));
}

TEST_CASE("a small run is clean") {
    VerifyConfig c;
    c.seed = 11;
    c.ring = "trig";
    c.suites = {"scalar", "perfect", "ophom"};
    const Report r = run_suites(c);
    CHECK(r.ok());
    CHECK(report_json(r)["status"] == "ok");
}
