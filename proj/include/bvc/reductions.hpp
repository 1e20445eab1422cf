#ifndef BVC_REDUCTIONS_HPP
#define BVC_REDUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bvc/control.hpp"

namespace bvc {

// Hitting Set: does some subset of at most `budget` elements intersect
// every listed set?
struct HittingSetInstance {
    std::vector<std::string> elements;  // the universe, in index order
    std::vector<std::vector<int>> sets; // element indices, non-empty
    long budget = 0;
};

bool operator==(const HittingSetInstance& a, const HittingSetInstance& b);
void validate(const HittingSetInstance& hs);

// The restricted variant feeding the candidate-control election family:
// more sets than elements and a budget strictly below the universe size.
struct RestrictedHittingSetInstance {
    HittingSetInstance hs; // n > m > k >= 1
};

RestrictedHittingSetInstance as_restricted(HittingSetInstance hs);

// Exact cover by 3-sets over a 3m-element universe.
struct X3CInstance {
    std::vector<std::string> elements;    // size 3m
    std::vector<std::array<int, 3>> sets; // distinct element indices
};

bool operator==(const X3CInstance& a, const X3CInstance& b);
void validate(const X3CInstance& x);

// Reference oracles, exhaustive and deterministic. Results are element
// (resp. set) indices, ascending.
//
// Hitting set: a minimum-cardinality hitting set of size <= budget if one
// exists, smaller sets first and lexicographic within one size.
std::optional<std::vector<int>> solve_hitting_set(const HittingSetInstance& hs,
                                                  std::size_t element_cap = 20);
// Exact cover: the lexicographically first covering subcollection.
std::optional<std::vector<int>> solve_x3c(const X3CInstance& x, std::size_t set_cap = 20);

// Decision-preserving repair of an arbitrary Hitting Set instance
// (1 <= budget <= |elements|) into the restricted shape. The one edge the
// arithmetic cannot repair, budget = |elements| (always YES), maps to a
// canonical trivially-YES instance and sets the flag.
struct HsToRhsResult {
    RestrictedHittingSetInstance instance;
    bool trivial_yes_shortcut = false;
};
HsToRhsResult hs_to_rhs(const HittingSetInstance& hs);

// Where each emitted vote line of a generated election came from.
struct VoteGroup {
    int group;       // 1-based row group in the construction
    int param;       // 0-based set/element index for per-i groups, -1 otherwise
    int vote_entry;  // index into election.votes()
    long flat_first; // first flattened ballot index
    long weight;     // multiplicity
};

struct ReductionLayout {
    std::vector<VoteGroup> groups;
    std::vector<std::pair<std::string, std::vector<CandidateId>>> pools;
    const std::vector<CandidateId>& pool(const std::string& name) const;
    // flattened index of the single ballot (group, param); weight must be 1
    long flat_index(int group, int param) const;
};

// The one election family behind all thirteen candidate-control hardness
// wrappers: candidates B + {c, d, w}, six voter groups, 6n(k+1)+4m+11 votes.
struct Construction1 {
    RestrictedHittingSetInstance source;
    Election election;
    ReductionLayout layout;
    long n = 0, m = 0, k = 0;
};
Construction1 build_construction1(const RestrictedHittingSetInstance& rhs);

// The codes wrap_construction1 accepts.
bool construction1_supports(ControlType code);
ControlInstance wrap_construction1(const Construction1& built, ControlType code);
ControlInstance wrap_construction1(const RestrictedHittingSetInstance& rhs, ControlType code);

struct CcdcReduction {
    HittingSetInstance source;
    ControlInstance instance;
    ReductionLayout layout;
};
// Deleting-candidates hardness: budget-k deletion over B + C' + D + E + F
// + {w}. Requires at least two sets and every set to hold at most
// n + budget elements (the ballot padding is sized n + budget - |S_i|).
CcdcReduction hs_to_ccdc(const HittingSetInstance& hs);

struct CcavReduction {
    X3CInstance source;
    ControlInstance instance;
    ReductionLayout layout;
};
CcavReduction x3c_to_ccav(const X3CInstance& x); // requires m >= 2

struct CcdvReduction {
    X3CInstance source;
    ControlInstance instance;
    ReductionLayout layout;
};
CcdvReduction x3c_to_ccdv(const X3CInstance& x); // requires m >= 2

struct CcpvReduction {
    X3CInstance source;
    ControlInstance instance;
    ReductionLayout layout;
};
CcpvReduction x3c_to_ccpv(const X3CInstance& x, TieRule rule); // requires m >= 2

// Source-witness translation: a hitting set (element indices) or an exact
// cover (set indices) becomes a control action that meets the chair's goal
// on the generated instance. Witnesses are validated against the source.
ControlAction construction1_witness(const Construction1& built, ControlType code,
                                    const std::vector<int>& hitting_set);
ControlAction ccdc_witness(const CcdcReduction& red, const std::vector<int>& hitting_set);
ControlAction ccav_witness(const CcavReduction& red, const std::vector<int>& cover);
ControlAction ccdv_witness(const CcdvReduction& red, const std::vector<int>& cover);
ControlAction ccpv_witness(const CcpvReduction& red, const std::vector<int>& cover);

} // namespace bvc

#endif
