#ifndef BVC_ELECTION_HPP
#define BVC_ELECTION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvc/errors.hpp"

namespace bvc {

using CandidateId = std::string;

// A candidate name is a non-empty token without whitespace, ',' or '>'.
bool valid_candidate_token(std::string_view name);

// One ballot line: a strict total order over all candidates, held as indices
// into the election's candidate list, together with how many voters cast it.
struct Vote {
    long multiplicity = 1;
    std::vector<int> ranking; // permutation of 0..num_candidates-1
};

inline bool operator==(const Vote& a, const Vote& b) {
    return a.multiplicity == b.multiplicity && a.ranking == b.ranking;
}

// An election: candidates in declaration order plus a list of complete
// ballots. Ballots are validated to be permutations at construction.
class Election {
public:
    Election() = default;
    Election(std::vector<CandidateId> candidates,
             std::vector<std::pair<long, std::vector<CandidateId>>> votes);

    // Index-level constructor for callers that already work with indices.
    Election(std::vector<CandidateId> candidates, std::vector<Vote> votes);

    const std::vector<CandidateId>& candidates() const { return candidates_; }
    const std::vector<Vote>& votes() const { return votes_; }

    int num_candidates() const { return static_cast<int>(candidates_.size()); }
    long total_votes() const { return total_votes_; } // multiplicity-weighted

    // Index of a declared candidate; throws input_error for unknown names.
    int candidate_index(const CandidateId& name) const;
    bool has_candidate(const CandidateId& name) const;

    const CandidateId& candidate_name(int index) const { return candidates_[index]; }

    // Validates that a ballot over this election's candidates is a
    // permutation and converts it to indices.
    std::vector<int> ranking_to_indices(const std::vector<CandidateId>& ranking) const;
    std::vector<CandidateId> indices_to_ranking(const std::vector<int>& ranking) const;

private:
    void check_votes();

    std::vector<CandidateId> candidates_;
    std::vector<Vote> votes_;
    long total_votes_ = 0;
};

bool operator==(const Election& a, const Election& b);
inline bool operator!=(const Election& a, const Election& b) { return !(a == b); }

// Strict majority threshold: floor(n/2) + 1.
long majority_threshold(long num_votes);

// Number of votes ranking `candidate` within the top `level` positions
// (multiplicity-weighted). Levels are 1-based; 1 <= level <= num candidates.
long level_score(const Election& e, const CandidateId& candidate, int level);

struct BucklinOutcome {
    // Least level at which some candidate reaches the majority threshold.
    // Empty exactly when the election has zero votes.
    std::optional<int> winning_level;
    // Candidates at the winning level whose score is maximal among those
    // meeting the threshold, in declaration order. Empty iff no level.
    std::vector<CandidateId> winners;
    // scores[c][l-1] = level-l score of candidate index c, all levels.
    std::vector<std::vector<long>> scores;

    long score(int candidate_index, int level) const {
        return scores[candidate_index][level - 1];
    }
};

// Full evaluation. Requires at least one candidate.
BucklinOutcome bucklin_outcome(const Election& e);

// The sub-election on `kept` candidates: declaration order is preserved and
// every ballot is filtered to the kept candidates. `kept` must be a
// non-empty subset of the declared candidates (duplicates rejected).
Election restrict_to(const Election& e, const std::vector<CandidateId>& kept);

// Repeated winner queries over sub-elections of one base election, cheap
// enough for brute-force inner loops. Ballot subsets are given as
// (vote index, weight) pairs; candidate subsets as a keep mask. Not
// thread-safe: each worker should own one evaluator.
class SubelectionEvaluator {
public:
    explicit SubelectionEvaluator(const Election& e);

    // Extra ballots (e.g. an unregistered-voter pool) appended after the
    // election's own votes; addressable as vote indices >= num_votes().
    int add_extra_ballot(const std::vector<int>& ranking);

    int num_votes() const { return num_base_votes_; }
    int num_ballots() const { return static_cast<int>(rankings_.size()); }

    // Winners of the sub-election (keep, scope). `keep` has one flag per
    // candidate. Returns the winning level, or 0 when the scope is empty or
    // no kept candidate exists; fills `out` with winner indices ascending.
    int winners(const std::vector<char>& keep,
                const std::vector<std::pair<int, long>>& scope,
                std::vector<int>& out);

    // Same over every ballot of the base election.
    int winners_full(const std::vector<char>& keep, std::vector<int>& out);

private:
    int num_candidates_;
    int num_base_votes_;
    std::vector<std::vector<int>> rankings_;
    std::vector<std::pair<int, long>> full_scope_;
    // epoch-stamped scratch, so no O(candidates) clearing per query
    std::vector<long> count_;
    std::vector<unsigned> stamp_;
    std::vector<int> cursor_;
    std::vector<int> crossed_;
    unsigned epoch_ = 0;
};

} // namespace bvc

#endif
