#include "bvc/solvers.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <stdexcept>

namespace bvc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_witness(const ControlInstance& inst, const ControlAction& w) {
    if (!goal_met(inst, apply_action(inst, w)))
        throw std::logic_error("internal error: witness failed re-evaluation");
}

// The vote classes the two destructive-voter deciders distinguish, for one
// rival d and one level l: whether the ballot ranks d within the top l,
// crossed with where it ranks the designated candidate (strictly above
// level l / exactly at level l / below level l). Class id = 3*a + b.
constexpr int kNumClasses = 6;

int classify(int pos_d, int pos_c, int level) {
    int a = pos_d < level ? 1 : 0;
    int b = pos_c < level - 1 ? 0 : (pos_c == level - 1 ? 1 : 2);
    return 3 * a + b;
}

// Every per-class count vector x with 0 <= x[q] <= cap[q] and sum <= budget.
template <typename F>
void for_each_class_vector(const std::array<long, kNumClasses>& cap, long budget, F&& f) {
    std::array<long, kNumClasses> x{};
    auto rec = [&](auto&& self, int q, long left) -> bool {
        if (q == kNumClasses)
            return f(x);
        for (x[q] = 0; x[q] <= std::min(cap[q], left); ++x[q])
            if (self(self, q + 1, left - x[q]))
                return true;
        x[q] = 0;
        return false;
    };
    rec(rec, 0, budget);
}

// Positions of every candidate within one ballot.
std::vector<int> position_table(const std::vector<int>& ranking) {
    std::vector<int> pos(ranking.size());
    for (std::size_t p = 0; p < ranking.size(); ++p)
        pos[ranking[p]] = static_cast<int>(p);
    return pos;
}

// Does the score profile admit a level where some rival blocks the
// designated candidate from being the unique winner? Conditions, for vote
// count n with threshold maj = floor(n/2)+1, rival score sd at level l,
// designated scores sc_prev (level l-1) and sc (level l):
//   (i) the rival reaches the threshold at level l,
//   (ii) the designated candidate has not already won strictly earlier,
//   (iii) if both reach it at level l, the rival ties or beats them.
bool blocks_unique_win(long n, int level, long sd, long sc_prev, long sc) {
    if (n <= 0)
        return false;
    long maj = n / 2 + 1;
    if (sd < maj)
        return false;
    if (level > 1 && sc_prev >= maj)
        return false;
    return sc < maj || sd >= sc;
}

} // namespace

Decision decide_brute_force(const ControlInstance& inst, unsigned long long action_cap) {
    validate(inst);
    auto t0 = Clock::now();
    unsigned long long space = action_space_size(inst);
    if (space > action_cap)
        throw resource_limit_error("action space holds " + std::to_string(space) +
                                   " actions, above the cap of " + std::to_string(action_cap));
    Decision d;
    ActionEnumerator en(inst);
    ActionEvaluator ev(inst);
    auto tag = ActionEvaluator::kind_of(inst.code);
    std::vector<int> chosen;
    while (en.next()) {
        chosen.clear();
        for (int pos : en.current_subset())
            chosen.push_back(en.pool()[pos]);
        const std::vector<int>& win = ev.run(tag, chosen);
        ++d.stats.actions_examined;
        if (ev.goal_met_indices(win)) {
            d.yes = true;
            d.witness = en.current();
            break;
        }
    }
    d.stats.elapsed_seconds = seconds_since(t0);
    if (d.yes)
        check_witness(inst, *d.witness);
    return d;
}

namespace {

struct ClassifiedEntry {
    int cls;
    long weight;
    long flat_first; // flattened index of the entry's first copy
};

// Classify weighted vote entries against (d, level); `flat` numbering runs
// over the expanded list.
std::vector<ClassifiedEntry> classify_entries(const std::vector<Vote>& votes,
                                              const std::vector<std::vector<int>>& positions,
                                              int d, int c, int level) {
    std::vector<ClassifiedEntry> out;
    out.reserve(votes.size());
    long flat = 0;
    for (std::size_t e = 0; e < votes.size(); ++e) {
        out.push_back({classify(positions[e][d], positions[e][c], level),
                       votes[e].multiplicity, flat});
        flat += votes[e].multiplicity;
    }
    return out;
}

std::array<long, kNumClasses> class_totals(const std::vector<ClassifiedEntry>& entries) {
    std::array<long, kNumClasses> t{};
    for (const auto& e : entries)
        t[e.cls] += e.weight;
    return t;
}

// The lowest `take[q]` flattened indices of each class, ascending.
std::vector<int> pick_lowest(const std::vector<ClassifiedEntry>& entries,
                             std::array<long, kNumClasses> take) {
    std::vector<int> out;
    for (const auto& e : entries) {
        long n = std::min(take[e.cls], e.weight);
        for (long i = 0; i < n; ++i)
            out.push_back(static_cast<int>(e.flat_first + i));
        take[e.cls] -= n;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Decision decide_dc_deleting_voters(const ControlInstance& inst) {
    validate(inst);
    if (inst.code != ControlType::DCDV)
        throw input_error("this decider handles DCDV only, got " + to_string(inst.code));
    auto t0 = Clock::now();
    Decision dec;
    const Election& e = inst.election;
    int m = e.num_candidates();
    int c = e.candidate_index(inst.designated);
    long n = e.total_votes();
    long budget = std::min(*inst.budget, n);

    // the empty deletion, i.e. the goal already holds
    ++dec.stats.actions_examined;
    if (goal_met(inst, bucklin_outcome(e).winners)) {
        dec.yes = true;
        dec.witness = DeleteVoters{};
        dec.stats.elapsed_seconds = seconds_since(t0);
        check_witness(inst, *dec.witness);
        return dec;
    }

    std::vector<std::vector<int>> positions;
    positions.reserve(e.votes().size());
    for (const Vote& v : e.votes())
        positions.push_back(position_table(v.ranking));

    for (int d = 0; d < m && !dec.yes; ++d) {
        if (d == c)
            continue;
        for (int level = 1; level <= m && !dec.yes; ++level) {
            auto entries = classify_entries(e.votes(), positions, d, c, level);
            auto caps = class_totals(entries);
            for_each_class_vector(caps, budget, [&](const std::array<long, kNumClasses>& x) {
                ++dec.stats.actions_examined;
                long removed = 0;
                for (long q : x)
                    removed += q;
                long n2 = n - removed;
                long sd = (caps[3] - x[3]) + (caps[4] - x[4]) + (caps[5] - x[5]);
                long sc_prev = (caps[0] - x[0]) + (caps[3] - x[3]);
                long sc = sc_prev + (caps[1] - x[1]) + (caps[4] - x[4]);
                if (!blocks_unique_win(n2, level, sd, sc_prev, sc))
                    return false;
                dec.yes = true;
                dec.witness = DeleteVoters{pick_lowest(entries, x)};
                return true;
            });
        }
    }

    if (!dec.yes && budget >= n) {
        // deleting every vote leaves an empty election and no winners
        std::vector<int> all(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i)
            all[i] = static_cast<int>(i);
        dec.yes = true;
        dec.witness = DeleteVoters{std::move(all)};
        ++dec.stats.actions_examined;
    }
    dec.stats.elapsed_seconds = seconds_since(t0);
    if (dec.yes)
        check_witness(inst, *dec.witness);
    return dec;
}

Decision decide_dc_adding_voters(const ControlInstance& inst) {
    validate(inst);
    if (inst.code != ControlType::DCAV)
        throw input_error("this decider handles DCAV only, got " + to_string(inst.code));
    auto t0 = Clock::now();
    Decision dec;
    const Election& e = inst.election;
    int m = e.num_candidates();
    int c = e.candidate_index(inst.designated);
    long n = e.total_votes();
    long pool = flattened_vote_count(inst.unregistered);
    long budget = std::min(*inst.budget, pool);

    // the empty registration, i.e. the goal already holds
    ++dec.stats.actions_examined;
    bool unique_now = n > 0;
    if (n > 0) {
        auto out = bucklin_outcome(e);
        unique_now = out.winners.size() == 1 && out.winners[0] == inst.designated;
    }
    if (!unique_now) {
        dec.yes = true;
        dec.witness = AddVoters{};
        dec.stats.elapsed_seconds = seconds_since(t0);
        check_witness(inst, *dec.witness);
        return dec;
    }

    std::vector<std::vector<int>> base_pos, pool_pos;
    for (const Vote& v : e.votes())
        base_pos.push_back(position_table(v.ranking));
    for (const Vote& v : inst.unregistered)
        pool_pos.push_back(position_table(v.ranking));

    for (int d = 0; d < m && !dec.yes; ++d) {
        if (d == c)
            continue;
        for (int level = 1; level <= m && !dec.yes; ++level) {
            auto base_entries = classify_entries(e.votes(), base_pos, d, c, level);
            auto base_caps = class_totals(base_entries);
            auto pool_entries = classify_entries(inst.unregistered, pool_pos, d, c, level);
            auto pool_caps = class_totals(pool_entries);
            for_each_class_vector(pool_caps, budget, [&](const std::array<long, kNumClasses>& y) {
                ++dec.stats.actions_examined;
                long added = 0;
                for (long q : y)
                    added += q;
                long n2 = n + added;
                long sd = (base_caps[3] + y[3]) + (base_caps[4] + y[4]) + (base_caps[5] + y[5]);
                long sc_prev = (base_caps[0] + y[0]) + (base_caps[3] + y[3]);
                long sc = sc_prev + (base_caps[1] + y[1]) + (base_caps[4] + y[4]);
                if (!blocks_unique_win(n2, level, sd, sc_prev, sc))
                    return false;
                dec.yes = true;
                dec.witness = AddVoters{pick_lowest(pool_entries, y)};
                return true;
            });
        }
    }
    dec.stats.elapsed_seconds = seconds_since(t0);
    if (dec.yes)
        check_witness(inst, *dec.witness);
    return dec;
}

Decision decide_auto(const ControlInstance& inst, unsigned long long action_cap) {
    if (inst.code == ControlType::DCAV)
        return decide_dc_adding_voters(inst);
    if (inst.code == ControlType::DCDV)
        return decide_dc_deleting_voters(inst);
    return decide_brute_force(inst, action_cap);
}

} // namespace bvc
