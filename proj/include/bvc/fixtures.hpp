#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvc/control.hpp"
#include "bvc/election.hpp"

namespace bvc {

// Hand-checked worked elections, stored as data so the expectations can be
// recomputed from scratch by any of the evaluation paths.

struct ScoreCheck {
    CandidateId candidate;
    int level = 1;
    long score = 0;
};

struct OutcomeCheck {
    std::string id;
    std::vector<CandidateId> restrict_to; // empty = full candidate set
    std::optional<int> expected_level;    // nullopt = no winner at any level
    std::vector<CandidateId> expected_winners;
    std::vector<ScoreCheck> expected_scores;
};

// A concrete control action applied to the fixture election, with the
// expected stage and final winner sets.
struct ActionCheck {
    std::string id;
    ControlType code = ControlType::CCAV;
    CandidateId designated;
    ControlAction action;
    std::vector<CandidateId> expected_final;
    bool expected_goal_met = false;
    std::optional<std::vector<CandidateId>> expected_stage1;
    std::optional<std::vector<CandidateId>> expected_stage2;
};

// A whole decision-problem instance with its known verdict.
struct Scenario {
    std::string id;
    ControlInstance instance;
    bool expected_yes = false;
};

struct Fixture {
    std::string name;
    Election election;
    std::vector<OutcomeCheck> outcome_checks;
    std::vector<ActionCheck> action_checks;
    std::vector<Scenario> scenarios;
};

std::vector<std::string> fixture_names();
Fixture fixture(const std::string& name);

} // namespace bvc
