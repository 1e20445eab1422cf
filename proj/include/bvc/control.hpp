#ifndef BVC_CONTROL_HPP
#define BVC_CONTROL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bvc/election.hpp"

namespace bvc {

enum class TieRule { TE, TP }; // ties-eliminate / ties-promote

// The 22 control decision problems. CC = constructive (make the designated
// candidate the unique winner), DC = destructive (prevent exactly that).
enum class ControlType {
    CCAC_U, CCAC_L, DCAC_U, DCAC_L,             // adding candidates (U = unlimited)
    CCDC, DCDC,                                 // deleting candidates
    CCPC_TE, CCPC_TP, DCPC_TE, DCPC_TP,         // partition of candidates
    CCRPC_TE, CCRPC_TP, DCRPC_TE, DCRPC_TP,     // run-off partition of candidates
    CCAV, DCAV,                                 // adding voters
    CCDV, DCDV,                                 // deleting voters
    CCPV_TE, CCPV_TP, DCPV_TE, DCPV_TP,         // partition of voters
};

constexpr int kNumControlTypes = 22;
extern const ControlType kAllControlTypes[kNumControlTypes];

std::string to_string(ControlType t); // canonical code, e.g. "CCAC-U", "CCPV-TE"
std::optional<ControlType> control_type_from_string(std::string_view code);

bool is_constructive(ControlType t);
bool adds_candidates(ControlType t);
bool deletes_candidates(ControlType t);
bool partitions_candidates(ControlType t); // plain or run-off
bool is_runoff_partition(ControlType t);
bool adds_voters(ControlType t);
bool deletes_voters(ControlType t);
bool partitions_voters(ControlType t);
bool is_partition(ControlType t);
bool has_unlimited_budget(ControlType t);           // AC-U codes
std::optional<TieRule> tie_rule_of(ControlType t);  // partition codes only

// One concrete control problem instance.
//
// For adding-candidates types the election ranges over qualified + spoiler
// candidates and `spoilers` names the spoiler subset; the designated
// candidate must be qualified. For adding-voters types `unregistered` holds
// the pool of ballots the chair may register. `budget` is the numeric
// action limit: absent for partition types and for the unlimited
// adding-candidates types, required (>= 0) otherwise. Budgets may exceed
// the available pool; solvers clamp.
struct ControlInstance {
    ControlType code = ControlType::CCAV;
    CandidateId designated;
    Election election;
    std::vector<CandidateId> spoilers;
    std::vector<Vote> unregistered;
    std::optional<long> budget;
};

bool operator==(const ControlInstance& a, const ControlInstance& b);
inline bool operator!=(const ControlInstance& a, const ControlInstance& b) { return !(a == b); }

// Throws input_error unless every structural invariant holds.
void validate(const ControlInstance& inst);

// Qualified candidates: the declared candidates minus spoilers.
std::vector<CandidateId> qualified_candidates(const ControlInstance& inst);

// Voter indices address the multiplicity-expanded ballot list: a `vote:`
// entry with multiplicity w occupies w consecutive indices.
long flattened_vote_count(const Election& e);
long flattened_vote_count(const std::vector<Vote>& votes);

// Control actions. Candidate sets are by name; voter sets are 0-based
// indices into the flattened list they act on.
struct AddCandidates { std::vector<CandidateId> added; };          // subset of spoilers
struct DeleteCandidates { std::vector<CandidateId> deleted; };
struct AddVoters { std::vector<int> added; };                      // into unregistered
struct DeleteVoters { std::vector<int> deleted; };                 // into registered votes
struct PartitionVoters { std::vector<int> first_group; };          // V1; V2 = rest
struct PartitionCandidates { std::vector<CandidateId> first_group; }; // C1; C2 = rest

using ControlAction = std::variant<AddCandidates, DeleteCandidates, AddVoters,
                                   DeleteVoters, PartitionVoters, PartitionCandidates>;

bool operator==(const ControlAction& a, const ControlAction& b);
std::string describe(const ControlAction& a); // e.g. "delete candidates {b2}"

// Survivors of a first-stage contest under the given tie rule: a unique
// winner always advances; ties advance everyone under TP and no one under TE.
std::vector<CandidateId> promote(const std::vector<CandidateId>& winners, TieRule rule);

// Winner set of the election reached by applying `action` to `inst`,
// in candidate declaration order. Throws input_error for illegal actions.
//
// Two-stage types promote each first-stage winner set by the code's tie
// rule and play the final round among the survivors, with the full voter
// list voting in every round whose candidate set includes them. An empty
// survivor set yields an empty winner set.
std::vector<CandidateId> apply_action(const ControlInstance& inst, const ControlAction& action);

// Stage-by-stage record of a partition action, for reports and tests.
struct TwoStageTrace {
    std::vector<CandidateId> stage1_winners, stage2_winners;
    std::vector<CandidateId> promoted1, promoted2;
    std::vector<CandidateId> final_winners;
};
TwoStageTrace trace_partition(const ControlInstance& inst, const ControlAction& action);

// Whether a final winner set satisfies the chair's goal.
bool goal_met(const ControlInstance& inst, const std::vector<CandidateId>& final_winners);

// Number of legal actions (2^n for partitions, bounded-size subsets
// otherwise), saturating at ULLONG_MAX.
unsigned long long action_space_size(const ControlInstance& inst);

// Shared evaluation machinery behind apply_action, trace_partition and the
// brute-force solver. Candidate subsets arrive as candidate indices, voter
// subsets as flattened indices; scratch buffers are reused across calls, so
// one evaluator serves one worker.
class ActionEvaluator {
public:
    enum class ActionKindTag { AddC, DelC, AddV, DelV, PartV, PartC };
    static ActionKindTag kind_of(ControlType t);

    explicit ActionEvaluator(const ControlInstance& inst);

    // Evaluates the action given as resolved indices. No legality checks;
    // apply_action is the checked path. Returns winner indices ascending.
    const std::vector<int>& run(ActionKindTag kind, const std::vector<int>& chosen);

    bool goal_met_indices(const std::vector<int>& winners) const;

    // Stage data of the most recent partition evaluation.
    const std::vector<int>& stage1() const { return stage1_; }
    const std::vector<int>& stage2() const { return stage2_; }
    const std::vector<int>& promoted1() const { return promoted1_; }
    const std::vector<int>& promoted2() const { return promoted2_; }

private:
    void coalesce(const std::vector<int>& flat, const std::vector<int>& map,
                  std::vector<std::pair<int, long>>& scope);
    void promote_indices(const std::vector<int>& winners, std::vector<int>& out);

    const ControlInstance* inst_;
    SubelectionEvaluator eval_;
    std::vector<int> flat_entry_;  // registered flat index -> vote entry
    std::vector<int> uflat_entry_; // unregistered flat index -> evaluator ballot
    std::vector<char> qualified_mask_;
    int designated_ = 0;
    bool constructive_ = false;
    int num_entries_ = 0;
    TieRule rule_ = TieRule::TE;
    std::vector<char> keep_;
    std::vector<std::pair<int, long>> scope_, scope2_;
    std::vector<long> entry_weight_;
    std::vector<int> touched_;
    std::vector<int> winners_, stage1_, stage2_, promoted1_, promoted2_;
};

// Streams every legal action, smaller actions first, lexicographic within
// one size. For deleting-candidates instances the designated candidate is
// never offered for deletion in the destructive variant.
class ActionEnumerator {
public:
    explicit ActionEnumerator(const ControlInstance& inst);

    bool next(); // advances; false when exhausted
    ControlAction current() const;

    // Raw view of the current subset (indices into the enumerated pool).
    const std::vector<int>& current_subset() const { return subset_; }

    // The pool the subset indices refer to: candidate indices for
    // candidate actions, flattened vote indices for voter actions.
    const std::vector<int>& pool() const { return pool_; }

private:
    ControlAction materialize(const std::vector<int>& chosen) const;

    const ControlInstance* inst_;
    std::vector<int> pool_;
    long max_size_ = 0;
    std::vector<int> subset_;
    bool started_ = false;
    bool done_ = false;
};

// Materializes every legal action in enumeration order; throws
// resource_limit_error when the space exceeds `cap`.
std::vector<ControlAction> legal_actions(const ControlInstance& inst,
                                         unsigned long long cap = 1ull << 20);

} // namespace bvc

#endif
