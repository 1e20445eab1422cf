#include "bvc/fixtures.hpp"

#include "bvc/errors.hpp"

namespace bvc {

namespace {

Election warp_election() {
    // 6 votes, unique winner a at level 2; restricted to {a,c,d} the winner
    // flips to c, so the system fails Unique-WARP
    return Election({"a", "b", "c", "d"},
                    {{3, {"a", "c", "b", "d"}},
                     {2, {"b", "d", "c", "a"}},
                     {1, {"d", "a", "c", "b"}}});
}

Election voter_partition_election() {
    // 4 votes; splitting off the first two voters dethrones a
    return Election({"a", "b", "c", "d"},
                    {{1, {"a", "c", "b", "d"}},
                     {1, {"d", "c", "a", "b"}},
                     {2, {"b", "a", "c", "d"}}});
}

ControlInstance partition_instance(ControlType code, const Election& e,
                                   const CandidateId& designated) {
    ControlInstance inst;
    inst.code = code;
    inst.designated = designated;
    inst.election = e;
    return inst;
}

Fixture make_prop1() {
    Fixture f;
    f.name = "prop1";
    f.election = warp_election();
    f.outcome_checks.push_back(
        {"full", {}, 2, {"a"}, {{"a", 2, 4}, {"b", 2, 2}, {"c", 2, 3}, {"d", 2, 3}}});
    f.outcome_checks.push_back(
        {"restricted-acd", {"a", "c", "d"}, 2, {"c"}, {{"c", 2, 5}, {"a", 2, 4}}});
    return f;
}

Fixture make_lemma2() {
    Fixture f;
    f.name = "lemma2-candidate-partition";
    f.election = warp_election();
    f.outcome_checks.push_back({"full", {}, 2, {"a"}, {}});

    PartitionCandidates split{{"a", "c", "d"}};
    const ControlType codes[] = {ControlType::CCPC_TE,  ControlType::CCPC_TP,
                                 ControlType::CCRPC_TE, ControlType::CCRPC_TP,
                                 ControlType::DCPC_TE,  ControlType::DCPC_TP,
                                 ControlType::DCRPC_TE, ControlType::DCRPC_TP};
    for (ControlType code : codes) {
        ActionCheck ac;
        ac.id = to_string(code);
        ac.code = code;
        ac.designated = is_constructive(code) ? "c" : "a";
        ac.action = split;
        ac.expected_final = {"c"};
        ac.expected_goal_met = true;
        ac.expected_stage1 = std::vector<CandidateId>{"c"};
        if (is_runoff_partition(code))
            ac.expected_stage2 = std::vector<CandidateId>{"b"};
        f.action_checks.push_back(std::move(ac));
    }

    f.scenarios.push_back({"verdict-CCPC-TE",
                           partition_instance(ControlType::CCPC_TE, f.election, "c"), true});
    f.scenarios.push_back({"verdict-DCPC-TP",
                           partition_instance(ControlType::DCPC_TP, f.election, "a"), true});
    return f;
}

Fixture make_lemma3() {
    Fixture f;
    f.name = "lemma3-voter-partition";
    f.election = voter_partition_election();
    f.outcome_checks.push_back({"full", {}, 2, {"a"}, {{"a", 2, 3}}});

    PartitionVoters split{{0, 1}};
    for (ControlType code : {ControlType::DCPV_TE, ControlType::DCPV_TP}) {
        ActionCheck ac;
        ac.id = to_string(code);
        ac.code = code;
        ac.designated = "a";
        ac.action = split;
        ac.expected_final = {"b", "c"};
        ac.expected_goal_met = true;
        ac.expected_stage1 = std::vector<CandidateId>{"c"};
        ac.expected_stage2 = std::vector<CandidateId>{"b"};
        f.action_checks.push_back(std::move(ac));

        f.scenarios.push_back({"verdict-" + to_string(code),
                               partition_instance(code, f.election, "a"), true});
    }
    return f;
}

} // namespace

std::vector<std::string> fixture_names() {
    return {"prop1", "lemma2-candidate-partition", "lemma3-voter-partition"};
}

Fixture fixture(const std::string& name) {
    if (name == "prop1")
        return make_prop1();
    if (name == "lemma2-candidate-partition")
        return make_lemma2();
    if (name == "lemma3-voter-partition")
        return make_lemma3();
    throw input_error("unknown fixture '" + name + "'; available: prop1, "
                      "lemma2-candidate-partition, lemma3-voter-partition");
}

} // namespace bvc
