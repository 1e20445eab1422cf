#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

#include "bvc/errors.hpp"
#include "bvc/fixtures.hpp"
#include "bvc/verify.hpp"

using namespace bvc;

TEST_CASE("every stored fixture recomputes cleanly") {
    std::vector<std::string> names = fixture_names();
    REQUIRE(names == std::vector<std::string>{"prop1", "lemma2-candidate-partition",
                                              "lemma3-voter-partition"});
    for (const std::string& name : names) {
        Fixture f = fixture(name);
        CHECK(f.name == name);
        CHECK(f.election.num_candidates() == 4);
        std::vector<CheckResult> results = check_fixture(f);
        CHECK_FALSE(results.empty());
        for (const CheckResult& r : results) {
            INFO(name << "/" << r.id << ": " << r.detail);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS(fixture("nope"), input_error);
}

TEST_CASE("fixture checking catches planted wrong expectations") {
    Fixture f = fixture("prop1");
    REQUIRE_FALSE(f.outcome_checks.empty());
    f.outcome_checks[0].expected_winners = {"b"};
    std::vector<CheckResult> results = check_fixture(f);
    CHECK(std::any_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return !r.pass; }));

    Fixture g = fixture("lemma3-voter-partition");
    REQUIRE_FALSE(g.action_checks.empty());
    g.action_checks[0].expected_goal_met = !g.action_checks[0].expected_goal_met;
    results = check_fixture(g);
    CHECK(std::any_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return !r.pass; }));
}

TEST_CASE("the closed-form score checks accept exactly the n > m > k >= 1 shapes") {
    for (const CheckResult& r : check_lemma6_formulas(3, 2, 1)) {
        INFO(r.id << ": " << r.detail);
        CHECK(r.pass);
    }
    for (const CheckResult& r : check_lemma6_formulas(6, 5, 4)) {
        INFO(r.id << ": " << r.detail);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(check_lemma6_formulas(3, 3, 1), input_error);
    CHECK_THROWS_AS(check_lemma6_formulas(3, 2, 0), input_error);
    CHECK_THROWS_AS(check_lemma6_formulas(2, 3, 1), input_error);
}

TEST_CASE("the verification suite aggregates, filters and self-tests") {
    VerifyConfig cfg;
    cfg.max_n = 2; // keep the sweeps tiny
    cfg.instance_cap = 5;

    SUBCASE("a small full run passes everywhere") {
        VerifyReport rep = run_verification_suite(cfg);
        CHECK(rep.all_passed());
        CHECK(rep.failed == 0);
        CHECK(rep.passed == static_cast<long>(rep.checks.size()));
        CHECK(rep.passed > 0);
    }

    SUBCASE("the suite filter selects by id prefix") {
        cfg.suites = {"poly"};
        VerifyReport rep = run_verification_suite(cfg);
        REQUIRE(rep.checks.size() == 3);
        for (const CheckResult& c : rep.checks)
            CHECK(c.id.rfind("poly/", 0) == 0);
    }

    SUBCASE("a zero size ceiling runs nothing") {
        cfg.max_n = 0;
        CHECK(run_verification_suite(cfg).checks.empty());
    }

    SUBCASE("the corruption hook proves failures are reported") {
        cfg.suites = {"fixtures"};
        cfg.corrupt_fixture = "prop1";
        VerifyReport rep = run_verification_suite(cfg);
        CHECK(rep.failed >= 1);
        CHECK_FALSE(rep.all_passed());
        for (const CheckResult& c : rep.checks)
            if (!c.pass)
                CHECK(c.id.rfind("fixtures/prop1/", 0) == 0);

        std::string text = to_text(rep);
        CHECK(std::count(text.begin(), text.end(), '\n') ==
              static_cast<long>(rep.checks.size()));
        CHECK(text.find("FAIL fixtures/prop1/") != std::string::npos);
        bool well_prefixed = text.rfind("PASS ", 0) == 0 || text.rfind("FAIL ", 0) == 0;
        CHECK(well_prefixed);
    }

    SUBCASE("identical configurations give identical reports") {
        cfg.suites = {"reductions"};
        cfg.seed = 7;
        std::string a = to_text(run_verification_suite(cfg));
        std::string b = to_text(run_verification_suite(cfg));
        CHECK(a == b);
        CHECK_FALSE(a.empty());
    }
}
