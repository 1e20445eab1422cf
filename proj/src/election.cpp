#include "bvc/election.hpp"

#include <algorithm>
#include <cctype>

namespace bvc {

bool valid_candidate_token(std::string_view name) {
    if (name.empty())
        return false;
    for (char ch : name) {
        if (ch == ',' || ch == '>' || std::isspace(static_cast<unsigned char>(ch)))
            return false;
    }
    return true;
}

Election::Election(std::vector<CandidateId> candidates,
                   std::vector<std::pair<long, std::vector<CandidateId>>> votes) {
    candidates_ = std::move(candidates);
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
        if (!valid_candidate_token(candidates_[i]))
            throw input_error("invalid candidate name '" + candidates_[i] + "'");
        for (std::size_t j = i + 1; j < candidates_.size(); ++j)
            if (candidates_[i] == candidates_[j])
                throw input_error("duplicate candidate '" + candidates_[i] + "'");
    }
    votes_.reserve(votes.size());
    for (auto& [mult, ranking] : votes) {
        Vote v;
        v.multiplicity = mult;
        v.ranking = ranking_to_indices(ranking);
        votes_.push_back(std::move(v));
    }
    check_votes();
}

Election::Election(std::vector<CandidateId> candidates, std::vector<Vote> votes)
    : Election(std::move(candidates),
               std::vector<std::pair<long, std::vector<CandidateId>>>{}) {
    votes_ = std::move(votes);
    for (const Vote& v : votes_) {
        std::vector<char> seen(candidates_.size(), 0);
        if (v.ranking.size() != candidates_.size())
            throw input_error("ballot does not rank every candidate exactly once");
        for (int c : v.ranking) {
            if (c < 0 || c >= num_candidates() || seen[c])
                throw input_error("ballot is not a permutation of the candidates");
            seen[c] = 1;
        }
    }
    check_votes();
}

void Election::check_votes() {
    total_votes_ = 0;
    for (const Vote& v : votes_) {
        if (v.multiplicity < 1)
            throw input_error("vote multiplicity must be at least 1");
        total_votes_ += v.multiplicity;
    }
}

int Election::candidate_index(const CandidateId& name) const {
    for (std::size_t i = 0; i < candidates_.size(); ++i)
        if (candidates_[i] == name)
            return static_cast<int>(i);
    throw input_error("unknown candidate '" + name + "'");
}

bool Election::has_candidate(const CandidateId& name) const {
    for (const auto& c : candidates_)
        if (c == name)
            return true;
    return false;
}

std::vector<int> Election::ranking_to_indices(const std::vector<CandidateId>& ranking) const {
    if (ranking.size() != candidates_.size())
        throw input_error("ballot must rank every candidate exactly once (got " +
                          std::to_string(ranking.size()) + " of " +
                          std::to_string(candidates_.size()) + ")");
    std::vector<int> out;
    out.reserve(ranking.size());
    std::vector<char> seen(candidates_.size(), 0);
    for (const CandidateId& name : ranking) {
        int idx = candidate_index(name);
        if (seen[idx])
            throw input_error("ballot ranks candidate '" + name + "' twice");
        seen[idx] = 1;
        out.push_back(idx);
    }
    return out;
}

std::vector<CandidateId> Election::indices_to_ranking(const std::vector<int>& ranking) const {
    std::vector<CandidateId> out;
    out.reserve(ranking.size());
    for (int idx : ranking)
        out.push_back(candidates_.at(idx));
    return out;
}

bool operator==(const Election& a, const Election& b) {
    return a.candidates() == b.candidates() && a.votes() == b.votes();
}

long majority_threshold(long num_votes) {
    if (num_votes < 0)
        throw input_error("vote count may not be negative");
    return num_votes / 2 + 1;
}

long level_score(const Election& e, const CandidateId& candidate, int level) {
    if (e.num_candidates() == 0)
        throw input_error("election has no candidates");
    if (level < 1 || level > e.num_candidates())
        throw input_error("level " + std::to_string(level) + " out of range 1.." +
                          std::to_string(e.num_candidates()));
    int target = e.candidate_index(candidate);
    long score = 0;
    for (const Vote& v : e.votes())
        for (int pos = 0; pos < level; ++pos)
            if (v.ranking[pos] == target) {
                score += v.multiplicity;
                break;
            }
    return score;
}

BucklinOutcome bucklin_outcome(const Election& e) {
    int m = e.num_candidates();
    if (m == 0)
        throw input_error("election has no candidates");
    BucklinOutcome out;
    out.scores.assign(m, std::vector<long>(m, 0));
    for (const Vote& v : e.votes())
        for (int pos = 0; pos < m; ++pos)
            out.scores[v.ranking[pos]][pos] += v.multiplicity;
    // prefix-sum each candidate's per-position counts into level scores
    for (int c = 0; c < m; ++c)
        for (int l = 1; l < m; ++l)
            out.scores[c][l] += out.scores[c][l - 1];

    long n = e.total_votes();
    if (n == 0)
        return out;
    long maj = majority_threshold(n);
    for (int l = 0; l < m; ++l) {
        long best = 0;
        for (int c = 0; c < m; ++c)
            best = std::max(best, out.scores[c][l]);
        if (best >= maj) {
            out.winning_level = l + 1;
            for (int c = 0; c < m; ++c)
                if (out.scores[c][l] == best)
                    out.winners.push_back(e.candidates()[c]);
            break;
        }
    }
    return out;
}

Election restrict_to(const Election& e, const std::vector<CandidateId>& kept) {
    if (kept.empty())
        throw input_error("restriction requires at least one candidate");
    std::vector<char> keep(e.num_candidates(), 0);
    for (const CandidateId& name : kept) {
        int idx = e.candidate_index(name);
        if (keep[idx])
            throw input_error("candidate '" + name + "' listed twice in restriction");
        keep[idx] = 1;
    }
    std::vector<CandidateId> cands;
    std::vector<int> remap(e.num_candidates(), -1);
    for (int c = 0; c < e.num_candidates(); ++c)
        if (keep[c]) {
            remap[c] = static_cast<int>(cands.size());
            cands.push_back(e.candidates()[c]);
        }
    std::vector<Vote> votes;
    votes.reserve(e.votes().size());
    for (const Vote& v : e.votes()) {
        Vote nv;
        nv.multiplicity = v.multiplicity;
        for (int c : v.ranking)
            if (keep[c])
                nv.ranking.push_back(remap[c]);
        votes.push_back(std::move(nv));
    }
    return Election(std::move(cands), std::move(votes));
}

SubelectionEvaluator::SubelectionEvaluator(const Election& e)
    : num_candidates_(e.num_candidates()) {
    rankings_.reserve(e.votes().size());
    full_scope_.reserve(e.votes().size());
    for (const Vote& v : e.votes()) {
        full_scope_.emplace_back(static_cast<int>(rankings_.size()), v.multiplicity);
        rankings_.push_back(v.ranking);
    }
    num_base_votes_ = static_cast<int>(rankings_.size());
    count_.assign(num_candidates_, 0);
    stamp_.assign(num_candidates_, 0);
}

int SubelectionEvaluator::add_extra_ballot(const std::vector<int>& ranking) {
    rankings_.push_back(ranking);
    return static_cast<int>(rankings_.size()) - 1;
}

int SubelectionEvaluator::winners(const std::vector<char>& keep,
                                  const std::vector<std::pair<int, long>>& scope,
                                  std::vector<int>& out) {
    out.clear();
    long n = 0;
    for (const auto& [vi, w] : scope)
        n += w;
    if (n == 0)
        return 0;
    int kept = 0;
    for (int c = 0; c < num_candidates_; ++c)
        kept += keep[c] ? 1 : 0;
    if (kept == 0)
        return 0;
    long maj = n / 2 + 1;

    ++epoch_;
    if (epoch_ == 0) { // wrapped; resynchronize stamps
        std::fill(stamp_.begin(), stamp_.end(), 0u);
        epoch_ = 1;
    }
    cursor_.assign(scope.size(), 0);
    for (int level = 1; level <= kept; ++level) {
        crossed_.clear();
        for (std::size_t s = 0; s < scope.size(); ++s) {
            const std::vector<int>& r = rankings_[scope[s].first];
            int pos = cursor_[s];
            while (!keep[r[pos]])
                ++pos;
            int c = r[pos];
            cursor_[s] = pos + 1;
            if (stamp_[c] != epoch_) {
                stamp_[c] = epoch_;
                count_[c] = 0;
            }
            long before = count_[c];
            count_[c] += scope[s].second;
            if (before < maj && count_[c] >= maj)
                crossed_.push_back(c);
        }
        if (!crossed_.empty()) {
            long best = 0;
            for (int c : crossed_)
                best = std::max(best, count_[c]);
            for (int c : crossed_)
                if (count_[c] == best)
                    out.push_back(c);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return level;
        }
    }
    return 0; // unreachable when n >= 1 and kept >= 1
}

int SubelectionEvaluator::winners_full(const std::vector<char>& keep, std::vector<int>& out) {
    return winners(keep, full_scope_, out);
}

} // namespace bvc
