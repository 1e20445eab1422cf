#pragma once

#include <string>

#include "bvc/control.hpp"
#include "bvc/reductions.hpp"

namespace bvc {

// Line-oriented text formats. '#' starts a comment line, blank lines are
// skipped, every other line is "key: value". Parse and serialize are inverse
// up to comment and whitespace normalization.

Election parse_election(const std::string& text);
std::string serialize_election(const Election& e);

ControlInstance parse_control_instance(const std::string& text);
std::string serialize_control_instance(const ControlInstance& inst);

HittingSetInstance parse_hitting_set(const std::string& text);
std::string serialize_hitting_set(const HittingSetInstance& hs);

X3CInstance parse_x3c(const std::string& text);
std::string serialize_x3c(const X3CInstance& x);

// Seed-deterministic generators; equal arguments give byte-identical text.
std::string gen_election_text(unsigned long long seed, long num_candidates, long num_votes);
std::string gen_hitting_set_text(unsigned long long seed, long num_elements, long num_sets,
                                 long budget);
std::string gen_x3c_text(unsigned long long seed, long num_elements, long num_sets);

} // namespace bvc
