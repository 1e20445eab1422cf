#include <optional>
#include <string>
#include <vector>

#include "doctest.h"

#include "bvc/errors.hpp"
#include "bvc/io.hpp"

using namespace bvc;

namespace {

Election worked_example() {
    return Election({"a", "b", "c", "d"},
                    {{3, {"a", "c", "b", "d"}},
                     {2, {"b", "d", "c", "a"}},
                     {1, {"d", "a", "c", "b"}}});
}

ControlInstance inst_of(ControlType code, CandidateId designated, Election e,
                        std::optional<long> budget = std::nullopt) {
    ControlInstance inst;
    inst.code = code;
    inst.designated = std::move(designated);
    inst.election = std::move(e);
    inst.budget = budget;
    return inst;
}

long line_of(const std::string& text, void (*parse)(const std::string&)) {
    try {
        parse(text);
    } catch (const parse_error& e) {
        return e.line();
    }
    return -1;
}

void parse_election_void(const std::string& t) { parse_election(t); }
void parse_control_void(const std::string& t) { parse_control_instance(t); }
void parse_hs_void(const std::string& t) { parse_hitting_set(t); }
void parse_x3c_void(const std::string& t) { parse_x3c(t); }

} // namespace

TEST_CASE("election files round-trip") {
    Election e = worked_example();
    std::string text = serialize_election(e);
    CHECK(text ==
          "candidates: a, b, c, d\n"
          "vote: 3 : a > c > b > d\n"
          "vote: 2 : b > d > c > a\n"
          "vote: 1 : d > a > c > b\n");
    Election back = parse_election(text);
    CHECK(back == e);
    // multiplicity structure survives; it is not flattened to repeated lines
    CHECK(back.votes() == e.votes());

    CHECK(parse_election("# header comment\n"
                         "\n"
                         "  candidates :  a ,  b\n"
                         "vote: 1 :  b  >  a \n") ==
          Election({"a", "b"}, {{1, std::vector<CandidateId>{"b", "a"}}}));
}

TEST_CASE("malformed election files name the offending line") {
    CHECK(line_of("candidates: a, b\nvote: 1 : a > b\nvote: 0 : a > b\n",
                  parse_election_void) == 3);
    CHECK(line_of("candidates: a, b\nvote: x : a > b\n", parse_election_void) == 2);
    CHECK(line_of("candidates: a, b\nvote: 1 : a\n", parse_election_void) == 2);
    CHECK(line_of("candidates: a, b\nvote: 1 : a > z\n", parse_election_void) == 2);
    CHECK(line_of("candidates: a, b\nvote: 1 : a > a\n", parse_election_void) == 2);
    CHECK(line_of("candidates: a, b\ncandidates: c\n", parse_election_void) == 2);
    CHECK(line_of("candidates: a, a\n", parse_election_void) == 1);
    CHECK(line_of("candidates: a,\n", parse_election_void) == 1);
    CHECK(line_of("candidates: a>b\n", parse_election_void) == 1);
    CHECK(line_of("just some words\n", parse_election_void) == 1);
    CHECK(line_of("candidates: a\nwinners: a\n", parse_election_void) == 2);
    // a missing candidates line is a structural hole, not a line defect
    CHECK_THROWS_AS(parse_election("vote: 1 : a\n"), input_error);
    CHECK_THROWS_AS(parse_election(""), input_error);
}

TEST_CASE("control files round-trip for every budget flavor") {
    auto roundtrip = [](const ControlInstance& inst) {
        ControlInstance back = parse_control_instance(serialize_control_instance(inst));
        CHECK(back.code == inst.code);
        CHECK(back.designated == inst.designated);
        CHECK(back.budget == inst.budget);
        CHECK(back.spoilers == inst.spoilers);
        CHECK(back.election == inst.election);
        CHECK(back.unregistered == inst.unregistered);
    };

    Election e = worked_example();

    ControlInstance av = inst_of(ControlType::CCAV, "a", e, 2);
    av.unregistered.push_back({2, av.election.ranking_to_indices({"d", "c", "b", "a"})});
    av.unregistered.push_back({1, av.election.ranking_to_indices({"b", "a", "d", "c"})});
    roundtrip(av);

    ControlInstance acu = inst_of(ControlType::CCAC_U, "a", e);
    acu.spoilers = {"b"};
    CHECK(serialize_control_instance(acu).find("budget: unlimited\n") != std::string::npos);
    roundtrip(acu);

    ControlInstance acl = inst_of(ControlType::DCAC_L, "a", e, 1);
    acl.spoilers = {"b", "d"};
    roundtrip(acl);

    roundtrip(inst_of(ControlType::DCPC_TP, "a", e));
    roundtrip(inst_of(ControlType::DCDV, "a", e, 0));
}

TEST_CASE("partition codes accept a separate tie line") {
    const std::string tail = "designated: a\n"
                             "candidates: a, b\n"
                             "vote: 1 : a > b\n";

    CHECK(parse_control_instance("control: DCPV\ntie: TP\n" + tail).code ==
          ControlType::DCPV_TP);
    CHECK(parse_control_instance("control: ccpv\ntie: te\n" + tail).code ==
          ControlType::CCPV_TE);
    // carrying the rule twice is fine when both agree
    CHECK(parse_control_instance("control: CCPV-TE\ntie: TE\n" + tail).code ==
          ControlType::CCPV_TE);

    CHECK_THROWS_WITH_AS(parse_control_instance("control: DCPV\n" + tail),
                         doctest::Contains("needs a tie rule"), input_error);
    CHECK_THROWS_WITH_AS(parse_control_instance("control: CCPV-TE\ntie: TP\n" + tail),
                         doctest::Contains("conflicts"), input_error);
    CHECK_THROWS_AS(
        parse_control_instance("control: CCAV\ntie: TE\nbudget: 1\n" + tail),
        input_error);
    CHECK_THROWS_AS(parse_control_instance("control: DCPV\ntie: XX\n" + tail), parse_error);
    CHECK(line_of("control: XXAV\n" + tail, parse_control_void) == 1);
}

TEST_CASE("control files enforce the budget and vote-pool rules") {
    const std::string tail = "designated: a\n"
                             "candidates: a, b\n"
                             "vote: 1 : a > b\n";

    CHECK_THROWS_AS(parse_control_instance("control: CCAV\nbudget: unlimited\n" + tail),
                    input_error);
    CHECK_THROWS_AS(
        parse_control_instance("control: CCAC-U\nbudget: 3\nspoilers: b\n" + tail),
        input_error);
    CHECK_THROWS_AS(parse_control_instance("control: CCPC-TE\nbudget: 1\n" + tail),
                    input_error);
    CHECK_THROWS_AS(parse_control_instance("control: CCDV\n" + tail), input_error);
    CHECK_THROWS_AS(parse_control_instance("control: CCDV\nbudget: -1\n" + tail),
                    input_error);
    CHECK_THROWS_AS(parse_control_instance("control: CCDV\nbudget: x\n" + tail), parse_error);
    // spoilers and unregistered votes belong to the AC resp. AV families
    CHECK_THROWS_AS(
        parse_control_instance("control: CCDV\nbudget: 1\nspoilers: b\n" + tail),
        input_error);
    CHECK_THROWS_AS(
        parse_control_instance("control: CCDV\nbudget: 1\n" + tail + "uvote: 1 : b > a\n"),
        input_error);
    CHECK(line_of("control: CCAV\nbudget: 1\n" + tail + "uvote: 1 : b > b\n",
                  parse_control_void) == 6);
    CHECK_THROWS_AS(parse_control_instance("control: CCDV\nbudget: 1\ncandidates: a, b\n"
                                           "vote: 1 : a > b\n"),
                    input_error); // no designated line
    CHECK(line_of("control: CCDV\ncontrol: CCDV\nbudget: 1\n" + tail,
                  parse_control_void) == 2);
}

TEST_CASE("source problem files round-trip") {
    SUBCASE("hitting set") {
        HittingSetInstance hs;
        hs.elements = {"b1", "b2", "b3", "b4"};
        hs.sets = {{0, 1}, {1, 2}, {2, 3}};
        hs.budget = 2;
        std::string text = serialize_hitting_set(hs);
        CHECK(text ==
              "elements: b1, b2, b3, b4\n"
              "set: b1, b2\n"
              "set: b2, b3\n"
              "set: b3, b4\n"
              "budget: 2\n");
        CHECK(parse_hitting_set(text) == hs);

        CHECK_THROWS_AS(parse_hitting_set("elements: b1\nset: b1\n"), input_error);
        CHECK(line_of("elements: b1\nset: b2\nbudget: 1\n", parse_hs_void) == 2);
        CHECK(line_of("elements: b1\nset:\nbudget: 1\n", parse_hs_void) == 2);
        CHECK(line_of("elements: b1\nhello: x\nbudget: 1\n", parse_hs_void) == 2);
    }

    SUBCASE("exact cover") {
        X3CInstance x;
        x.elements = {"b1", "b2", "b3", "b4", "b5", "b6"};
        x.sets = {{0, 1, 2}, {3, 4, 5}};
        std::string text = serialize_x3c(x);
        CHECK(text ==
              "elements: b1, b2, b3, b4, b5, b6\n"
              "set: b1, b2, b3\n"
              "set: b4, b5, b6\n");
        CHECK(parse_x3c(text) == x);

        CHECK(line_of(text + "budget: 1\n", parse_x3c_void) == 4);
        CHECK(line_of("elements: b1, b2, b3\nset: b1, b2\n", parse_x3c_void) == 2);
        CHECK(line_of("elements: b1, b2, b3\nelements: b1\n", parse_x3c_void) == 2);
    }
}

TEST_CASE("generators are seed-deterministic and emit valid files") {
    SUBCASE("elections") {
        std::string a = gen_election_text(7, 4, 6);
        CHECK(a == gen_election_text(7, 4, 6));
        CHECK(a != gen_election_text(8, 4, 6));
        Election e = parse_election(a);
        CHECK(e.num_candidates() == 4);
        CHECK(e.total_votes() == 6);

        CHECK_THROWS_AS(gen_election_text(1, 0, 1), input_error);
        CHECK_THROWS_AS(gen_election_text(1, 27, 1), input_error);
        CHECK_THROWS_AS(gen_election_text(1, 3, -1), input_error);
    }

    SUBCASE("hitting set") {
        std::string a = gen_hitting_set_text(7, 5, 6, 2);
        CHECK(a == gen_hitting_set_text(7, 5, 6, 2));
        HittingSetInstance hs = parse_hitting_set(a);
        CHECK(hs.elements.size() == 5);
        CHECK(hs.sets.size() == 6);
        CHECK(hs.budget == 2);

        CHECK_THROWS_AS(gen_hitting_set_text(1, 21, 1, 1), input_error);
        CHECK_THROWS_AS(gen_hitting_set_text(1, 5, -1, 1), input_error);
    }

    SUBCASE("exact cover") {
        std::string a = gen_x3c_text(7, 9, 5);
        CHECK(a == gen_x3c_text(7, 9, 5));
        X3CInstance x = parse_x3c(a);
        CHECK(x.elements.size() == 9);
        CHECK(x.sets.size() == 5);

        CHECK_THROWS_AS(gen_x3c_text(1, 8, 2), input_error);  // not a multiple of 3
        CHECK_THROWS_AS(gen_x3c_text(1, 63, 2), input_error); // above the cap
        CHECK_THROWS_AS(gen_x3c_text(1, 9, -1), input_error);
    }
}
