#ifndef BVC_SOLVERS_HPP
#define BVC_SOLVERS_HPP

#include <optional>

#include "bvc/control.hpp"

namespace bvc {

struct DecisionStats {
    unsigned long long actions_examined = 0; // candidate solutions evaluated
    double elapsed_seconds = 0.0;
};

struct Decision {
    bool yes = false;
    std::optional<ControlAction> witness; // present iff yes
    DecisionStats stats;
};

inline constexpr unsigned long long kDefaultActionCap = 1ull << 24;

// Exact decision by exhaustive search over the legal actions, smallest
// actions first, lexicographic within one size; the witness is the first
// success. Throws resource_limit_error when the action space exceeds
// `action_cap`. Every YES is re-checked through apply_action before being
// returned.
Decision decide_brute_force(const ControlInstance& inst,
                            unsigned long long action_cap = kDefaultActionCap);

// Polynomial decider for destructive control by adding voters (DCAV).
Decision decide_dc_adding_voters(const ControlInstance& inst);

// Polynomial decider for destructive control by deleting voters (DCDV).
Decision decide_dc_deleting_voters(const ControlInstance& inst);

// The polynomial decider when one exists for the code, else brute force.
Decision decide_auto(const ControlInstance& inst,
                     unsigned long long action_cap = kDefaultActionCap);

} // namespace bvc

#endif
