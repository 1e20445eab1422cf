#include "bvc/control.hpp"

#include <algorithm>
#include <cctype>

namespace bvc {

const ControlType kAllControlTypes[kNumControlTypes] = {
    ControlType::CCAC_U, ControlType::CCAC_L, ControlType::DCAC_U, ControlType::DCAC_L,
    ControlType::CCDC,   ControlType::DCDC,
    ControlType::CCPC_TE, ControlType::CCPC_TP, ControlType::DCPC_TE, ControlType::DCPC_TP,
    ControlType::CCRPC_TE, ControlType::CCRPC_TP, ControlType::DCRPC_TE, ControlType::DCRPC_TP,
    ControlType::CCAV, ControlType::DCAV, ControlType::CCDV, ControlType::DCDV,
    ControlType::CCPV_TE, ControlType::CCPV_TP, ControlType::DCPV_TE, ControlType::DCPV_TP,
};

namespace {

struct CodeEntry {
    ControlType type;
    const char* code;
};

const CodeEntry kCodeTable[kNumControlTypes] = {
    {ControlType::CCAC_U, "CCAC-U"},   {ControlType::CCAC_L, "CCAC-L"},
    {ControlType::DCAC_U, "DCAC-U"},   {ControlType::DCAC_L, "DCAC-L"},
    {ControlType::CCDC, "CCDC"},       {ControlType::DCDC, "DCDC"},
    {ControlType::CCPC_TE, "CCPC-TE"}, {ControlType::CCPC_TP, "CCPC-TP"},
    {ControlType::DCPC_TE, "DCPC-TE"}, {ControlType::DCPC_TP, "DCPC-TP"},
    {ControlType::CCRPC_TE, "CCRPC-TE"}, {ControlType::CCRPC_TP, "CCRPC-TP"},
    {ControlType::DCRPC_TE, "DCRPC-TE"}, {ControlType::DCRPC_TP, "DCRPC-TP"},
    {ControlType::CCAV, "CCAV"},       {ControlType::DCAV, "DCAV"},
    {ControlType::CCDV, "CCDV"},       {ControlType::DCDV, "DCDV"},
    {ControlType::CCPV_TE, "CCPV-TE"}, {ControlType::CCPV_TP, "CCPV-TP"},
    {ControlType::DCPV_TE, "DCPV-TE"}, {ControlType::DCPV_TP, "DCPV-TP"},
};

using ActionKind = ActionEvaluator::ActionKindTag;

} // namespace

ActionEvaluator::ActionKindTag ActionEvaluator::kind_of(ControlType t) {
    if (adds_candidates(t)) return ActionKindTag::AddC;
    if (deletes_candidates(t)) return ActionKindTag::DelC;
    if (adds_voters(t)) return ActionKindTag::AddV;
    if (deletes_voters(t)) return ActionKindTag::DelV;
    if (partitions_voters(t)) return ActionKindTag::PartV;
    return ActionKindTag::PartC;
}

std::string to_string(ControlType t) {
    for (const auto& e : kCodeTable)
        if (e.type == t)
            return e.code;
    return "?";
}

std::optional<ControlType> control_type_from_string(std::string_view code) {
    std::string up;
    up.reserve(code.size());
    for (char ch : code)
        up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    for (const auto& e : kCodeTable)
        if (up == e.code)
            return e.type;
    return std::nullopt;
}

bool is_constructive(ControlType t) {
    switch (t) {
    case ControlType::CCAC_U: case ControlType::CCAC_L: case ControlType::CCDC:
    case ControlType::CCPC_TE: case ControlType::CCPC_TP:
    case ControlType::CCRPC_TE: case ControlType::CCRPC_TP:
    case ControlType::CCAV: case ControlType::CCDV:
    case ControlType::CCPV_TE: case ControlType::CCPV_TP:
        return true;
    default:
        return false;
    }
}

bool adds_candidates(ControlType t) {
    return t == ControlType::CCAC_U || t == ControlType::CCAC_L ||
           t == ControlType::DCAC_U || t == ControlType::DCAC_L;
}

bool deletes_candidates(ControlType t) {
    return t == ControlType::CCDC || t == ControlType::DCDC;
}

bool partitions_candidates(ControlType t) {
    switch (t) {
    case ControlType::CCPC_TE: case ControlType::CCPC_TP:
    case ControlType::DCPC_TE: case ControlType::DCPC_TP:
    case ControlType::CCRPC_TE: case ControlType::CCRPC_TP:
    case ControlType::DCRPC_TE: case ControlType::DCRPC_TP:
        return true;
    default:
        return false;
    }
}

bool is_runoff_partition(ControlType t) {
    return t == ControlType::CCRPC_TE || t == ControlType::CCRPC_TP ||
           t == ControlType::DCRPC_TE || t == ControlType::DCRPC_TP;
}

bool adds_voters(ControlType t) {
    return t == ControlType::CCAV || t == ControlType::DCAV;
}

bool deletes_voters(ControlType t) {
    return t == ControlType::CCDV || t == ControlType::DCDV;
}

bool partitions_voters(ControlType t) {
    return t == ControlType::CCPV_TE || t == ControlType::CCPV_TP ||
           t == ControlType::DCPV_TE || t == ControlType::DCPV_TP;
}

bool is_partition(ControlType t) {
    return partitions_voters(t) || partitions_candidates(t);
}

bool has_unlimited_budget(ControlType t) {
    return t == ControlType::CCAC_U || t == ControlType::DCAC_U;
}

std::optional<TieRule> tie_rule_of(ControlType t) {
    switch (t) {
    case ControlType::CCPC_TE: case ControlType::DCPC_TE:
    case ControlType::CCRPC_TE: case ControlType::DCRPC_TE:
    case ControlType::CCPV_TE: case ControlType::DCPV_TE:
        return TieRule::TE;
    case ControlType::CCPC_TP: case ControlType::DCPC_TP:
    case ControlType::CCRPC_TP: case ControlType::DCRPC_TP:
    case ControlType::CCPV_TP: case ControlType::DCPV_TP:
        return TieRule::TP;
    default:
        return std::nullopt;
    }
}

bool operator==(const ControlInstance& a, const ControlInstance& b) {
    return a.code == b.code && a.designated == b.designated && a.election == b.election &&
           a.spoilers == b.spoilers && a.unregistered == b.unregistered && a.budget == b.budget;
}

void validate(const ControlInstance& inst) {
    const Election& e = inst.election;
    if (e.num_candidates() == 0)
        throw input_error("control instance needs at least one candidate");
    if (!e.has_candidate(inst.designated))
        throw input_error("designated candidate '" + inst.designated + "' is not declared");

    if (adds_candidates(inst.code)) {
        std::vector<char> spoiler(e.num_candidates(), 0);
        for (const CandidateId& s : inst.spoilers) {
            int idx = e.candidate_index(s);
            if (spoiler[idx])
                throw input_error("spoiler '" + s + "' listed twice");
            spoiler[idx] = 1;
        }
        if (spoiler[e.candidate_index(inst.designated)])
            throw input_error("designated candidate may not be a spoiler");
    } else if (!inst.spoilers.empty()) {
        throw input_error("spoilers are only meaningful for adding-candidates control");
    }

    if (adds_voters(inst.code)) {
        for (const Vote& v : inst.unregistered) {
            if (v.multiplicity < 1)
                throw input_error("unregistered vote multiplicity must be at least 1");
            if (static_cast<int>(v.ranking.size()) != e.num_candidates())
                throw input_error("unregistered ballot does not rank every candidate");
            std::vector<char> seen(e.num_candidates(), 0);
            for (int c : v.ranking) {
                if (c < 0 || c >= e.num_candidates() || seen[c])
                    throw input_error("unregistered ballot is not a permutation");
                seen[c] = 1;
            }
        }
    } else if (!inst.unregistered.empty()) {
        throw input_error("an unregistered pool is only meaningful for adding-voters control");
    }

    if (is_partition(inst.code) || has_unlimited_budget(inst.code)) {
        if (inst.budget.has_value())
            throw input_error("control type " + to_string(inst.code) +
                              " does not take a numeric budget");
    } else {
        if (!inst.budget.has_value())
            throw input_error("control type " + to_string(inst.code) + " requires a budget");
        if (*inst.budget < 0)
            throw input_error("budget may not be negative");
    }
}

std::vector<CandidateId> qualified_candidates(const ControlInstance& inst) {
    std::vector<CandidateId> out;
    for (const CandidateId& c : inst.election.candidates())
        if (std::find(inst.spoilers.begin(), inst.spoilers.end(), c) == inst.spoilers.end())
            out.push_back(c);
    return out;
}

long flattened_vote_count(const Election& e) {
    return e.total_votes();
}

long flattened_vote_count(const std::vector<Vote>& votes) {
    long n = 0;
    for (const Vote& v : votes)
        n += v.multiplicity;
    return n;
}

bool operator==(const ControlAction& a, const ControlAction& b) {
    if (a.index() != b.index())
        return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, AddCandidates>) return x.added == y.added;
            else if constexpr (std::is_same_v<T, DeleteCandidates>) return x.deleted == y.deleted;
            else if constexpr (std::is_same_v<T, AddVoters>) return x.added == y.added;
            else if constexpr (std::is_same_v<T, DeleteVoters>) return x.deleted == y.deleted;
            else if constexpr (std::is_same_v<T, PartitionVoters>) return x.first_group == y.first_group;
            else return x.first_group == y.first_group;
        },
        a);
}

namespace {

std::string join_names(const std::vector<CandidateId>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    out += "}";
    return out;
}

std::string join_indices(const std::vector<int>& idx) {
    std::string out = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(idx[i] + 1); // voters are reported 1-based
    }
    out += "}";
    return out;
}

} // namespace

std::string describe(const ControlAction& a) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AddCandidates>)
                return "add candidates " + join_names(x.added);
            else if constexpr (std::is_same_v<T, DeleteCandidates>)
                return "delete candidates " + join_names(x.deleted);
            else if constexpr (std::is_same_v<T, AddVoters>)
                return "add voters " + join_indices(x.added);
            else if constexpr (std::is_same_v<T, DeleteVoters>)
                return "delete voters " + join_indices(x.deleted);
            else if constexpr (std::is_same_v<T, PartitionVoters>)
                return "V1 = " + join_indices(x.first_group);
            else
                return "C1 = " + join_names(x.first_group);
        },
        a);
}

std::vector<CandidateId> promote(const std::vector<CandidateId>& winners, TieRule rule) {
    if (rule == TieRule::TP || winners.size() == 1)
        return winners;
    return {};
}

// Shared evaluation machinery for apply_action, trace_partition and the
// brute-force solver. Candidate subsets arrive as indices, voter subsets as
// flattened indices; scratch buffers are reused across calls.
ActionEvaluator::ActionEvaluator(const ControlInstance& inst)
    : inst_(&inst), eval_(inst.election) {
    const Election& e = inst.election;
    int m = e.num_candidates();
    designated_ = e.candidate_index(inst.designated);
    constructive_ = is_constructive(inst.code);

    qualified_mask_.assign(m, 1);
    for (const CandidateId& s : inst.spoilers)
        qualified_mask_[e.candidate_index(s)] = 0;

    for (int vi = 0; vi < static_cast<int>(e.votes().size()); ++vi)
        for (long c = 0; c < e.votes()[vi].multiplicity; ++c)
            flat_entry_.push_back(vi);
    for (const Vote& v : inst.unregistered) {
        int ballot = eval_.add_extra_ballot(v.ranking);
        for (long c = 0; c < v.multiplicity; ++c)
            uflat_entry_.push_back(ballot);
    }

    num_entries_ = static_cast<int>(e.votes().size());
    entry_weight_.assign(eval_.num_ballots(), 0);
    keep_.assign(m, 0);
    if (auto rule = tie_rule_of(inst.code))
        rule_ = *rule;
}

void ActionEvaluator::coalesce(const std::vector<int>& flat, const std::vector<int>& map,
                               std::vector<std::pair<int, long>>& scope) {
    scope.clear();
    touched_.clear();
    for (int f : flat) {
        int entry = map[f];
        if (entry_weight_[entry] == 0)
            touched_.push_back(entry);
        ++entry_weight_[entry];
    }
    std::sort(touched_.begin(), touched_.end());
    for (int entry : touched_) {
        scope.emplace_back(entry, entry_weight_[entry]);
        entry_weight_[entry] = 0;
    }
}

const std::vector<int>& ActionEvaluator::run(ActionKindTag kind, const std::vector<int>& chosen) {
    const Election& e = inst_->election;
    int m = e.num_candidates();
    winners_.clear();

    switch (kind) {
    case ActionKindTag::AddC: {
        keep_ = qualified_mask_;
        for (int c : chosen)
            keep_[c] = 1;
        eval_.winners_full(keep_, winners_);
        break;
    }
    case ActionKindTag::DelC: {
        keep_.assign(m, 1);
        for (int c : chosen)
            keep_[c] = 0;
        eval_.winners_full(keep_, winners_);
        break;
    }
    case ActionKindTag::AddV: {
        scope_.clear();
        for (int vi = 0; vi < num_entries_; ++vi)
            scope_.emplace_back(vi, e.votes()[vi].multiplicity);
        coalesce(chosen, uflat_entry_, scope2_);
        scope_.insert(scope_.end(), scope2_.begin(), scope2_.end());
        keep_.assign(m, 1);
        eval_.winners(keep_, scope_, winners_);
        break;
    }
    case ActionKindTag::DelV: {
        coalesce(chosen, flat_entry_, scope2_);
        scope_.clear();
        std::size_t j = 0;
        for (int vi = 0; vi < num_entries_; ++vi) {
            long w = e.votes()[vi].multiplicity;
            if (j < scope2_.size() && scope2_[j].first == vi)
                w -= scope2_[j++].second;
            if (w > 0)
                scope_.emplace_back(vi, w);
        }
        keep_.assign(m, 1);
        eval_.winners(keep_, scope_, winners_);
        break;
    }
    case ActionKindTag::PartV: {
        coalesce(chosen, flat_entry_, scope_); // V1, coalesced
        scope2_.clear();                       // V2 = complement
        std::size_t j = 0;
        for (int vi = 0; vi < num_entries_; ++vi) {
            long w = e.votes()[vi].multiplicity;
            if (j < scope_.size() && scope_[j].first == vi)
                w -= scope_[j++].second;
            if (w > 0)
                scope2_.emplace_back(vi, w);
        }
        keep_.assign(m, 1);
        eval_.winners(keep_, scope_, stage1_);
        eval_.winners(keep_, scope2_, stage2_);
        promote_indices(stage1_, promoted1_);
        promote_indices(stage2_, promoted2_);
        keep_.assign(m, 0);
        bool any = false;
        for (int c : promoted1_) { keep_[c] = 1; any = true; }
        for (int c : promoted2_) { keep_[c] = 1; any = true; }
        if (any)
            eval_.winners_full(keep_, winners_);
        break;
    }
    case ActionKindTag::PartC: {
        keep_.assign(m, 0); // C1
        for (int c : chosen)
            keep_[c] = 1;
        eval_.winners_full(keep_, stage1_);
        promote_indices(stage1_, promoted1_);
        if (is_runoff_partition(inst_->code)) {
            for (int c = 0; c < m; ++c)
                keep_[c] = !keep_[c]; // C2
            eval_.winners_full(keep_, stage2_);
            promote_indices(stage2_, promoted2_);
            keep_.assign(m, 0);
            for (int c : promoted1_) keep_[c] = 1;
            for (int c : promoted2_) keep_[c] = 1;
        } else {
            stage2_.clear();
            promoted2_.clear();
            std::vector<char> final_keep(m, 0);
            for (int c = 0; c < m; ++c)
                if (!keep_[c])
                    final_keep[c] = 1; // C2 survives unplayed
            for (int c : promoted1_)
                final_keep[c] = 1;
            keep_ = final_keep;
        }
        bool any = false;
        for (int c = 0; c < m; ++c)
            if (keep_[c]) { any = true; break; }
        if (any)
            eval_.winners_full(keep_, winners_);
        break;
    }
    }
    return winners_;
}

void ActionEvaluator::promote_indices(const std::vector<int>& winners, std::vector<int>& out) {
    if (rule_ == TieRule::TP || winners.size() == 1)
        out = winners;
    else
        out.clear();
}

bool ActionEvaluator::goal_met_indices(const std::vector<int>& winners) const {
    bool unique = winners.size() == 1 && winners[0] == designated_;
    return constructive_ ? unique : !unique;
}

namespace {

void require_unique_sorted_members(std::vector<int> items, long limit, const char* what) {
    std::sort(items.begin(), items.end());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i] < 0 || items[i] >= limit)
            throw input_error(std::string(what) + " index out of range");
        if (i && items[i] == items[i - 1])
            throw input_error(std::string(what) + " listed twice");
    }
}

// Validates the action against the instance and returns the chosen set as
// candidate indices / flattened voter indices.
std::pair<ActionEvaluator::ActionKindTag, std::vector<int>>
check_action(const ControlInstance& inst, const ControlAction& action) {
    const Election& e = inst.election;
    ActionKind kind = ActionEvaluator::kind_of(inst.code);
    long budget = inst.budget.value_or(-1);
    using Tag = ActionEvaluator::ActionKindTag;

    if (const auto* a = std::get_if<AddCandidates>(&action)) {
        if (kind != ActionKind::AddC)
            throw input_error("action kind does not match control type " + to_string(inst.code));
        std::vector<int> chosen;
        for (const CandidateId& name : a->added) {
            if (std::find(inst.spoilers.begin(), inst.spoilers.end(), name) == inst.spoilers.end())
                throw input_error("'" + name + "' is not a spoiler candidate");
            chosen.push_back(e.candidate_index(name));
        }
        require_unique_sorted_members(chosen, e.num_candidates(), "spoiler");
        if (!has_unlimited_budget(inst.code) &&
            static_cast<long>(chosen.size()) > budget)
            throw input_error("action exceeds the budget");
        return {Tag::AddC, std::move(chosen)};
    }
    if (const auto* a = std::get_if<DeleteCandidates>(&action)) {
        if (kind != ActionKind::DelC)
            throw input_error("action kind does not match control type " + to_string(inst.code));
        std::vector<int> chosen;
        for (const CandidateId& name : a->deleted)
            chosen.push_back(e.candidate_index(name));
        require_unique_sorted_members(chosen, e.num_candidates(), "candidate");
        if (inst.code == ControlType::DCDC)
            for (int c : chosen)
                if (c == e.candidate_index(inst.designated))
                    throw input_error("destructive deletion may not remove the designated candidate");
        if (static_cast<long>(chosen.size()) > budget)
            throw input_error("action exceeds the budget");
        return {Tag::DelC, std::move(chosen)};
    }
    if (const auto* a = std::get_if<AddVoters>(&action)) {
        if (kind != ActionKind::AddV)
            throw input_error("action kind does not match control type " + to_string(inst.code));
        require_unique_sorted_members(a->added, flattened_vote_count(inst.unregistered),
                                      "unregistered vote");
        if (static_cast<long>(a->added.size()) > budget)
            throw input_error("action exceeds the budget");
        return {Tag::AddV, a->added};
    }
    if (const auto* a = std::get_if<DeleteVoters>(&action)) {
        if (kind != ActionKind::DelV)
            throw input_error("action kind does not match control type " + to_string(inst.code));
        require_unique_sorted_members(a->deleted, flattened_vote_count(e), "vote");
        if (static_cast<long>(a->deleted.size()) > budget)
            throw input_error("action exceeds the budget");
        return {Tag::DelV, a->deleted};
    }
    if (const auto* a = std::get_if<PartitionVoters>(&action)) {
        if (kind != ActionKind::PartV)
            throw input_error("action kind does not match control type " + to_string(inst.code));
        require_unique_sorted_members(a->first_group, flattened_vote_count(e), "vote");
        return {Tag::PartV, a->first_group};
    }
    const auto& a = std::get<PartitionCandidates>(action);
    if (kind != ActionKind::PartC)
        throw input_error("action kind does not match control type " + to_string(inst.code));
    std::vector<int> chosen;
    for (const CandidateId& name : a.first_group)
        chosen.push_back(e.candidate_index(name));
    require_unique_sorted_members(chosen, e.num_candidates(), "candidate");
    return {Tag::PartC, std::move(chosen)};
}

} // namespace

std::vector<CandidateId> apply_action(const ControlInstance& inst, const ControlAction& action) {
    validate(inst);
    auto [tag, chosen] = check_action(inst, action);
    ActionEvaluator ev(inst);
    const std::vector<int>& win = ev.run(tag, chosen);
    return inst.election.indices_to_ranking(win);
}

TwoStageTrace trace_partition(const ControlInstance& inst, const ControlAction& action) {
    validate(inst);
    if (!is_partition(inst.code))
        throw input_error("trace_partition is only defined for partition control types");
    auto [tag, chosen] = check_action(inst, action);
    ActionEvaluator ev(inst);
    TwoStageTrace t;
    t.final_winners = inst.election.indices_to_ranking(ev.run(tag, chosen));
    t.stage1_winners = inst.election.indices_to_ranking(ev.stage1());
    t.stage2_winners = inst.election.indices_to_ranking(ev.stage2());
    t.promoted1 = inst.election.indices_to_ranking(ev.promoted1());
    t.promoted2 = inst.election.indices_to_ranking(ev.promoted2());
    return t;
}

bool goal_met(const ControlInstance& inst, const std::vector<CandidateId>& final_winners) {
    bool unique = final_winners.size() == 1 && final_winners[0] == inst.designated;
    return is_constructive(inst.code) ? unique : !unique;
}

namespace {

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    unsigned long long s = a + b;
    return s < a ? ~0ull : s;
}

unsigned long long sat_mul_div(unsigned long long a, unsigned long long num, unsigned long long den) {
    // a * num / den with saturation; used for binomial coefficients
    if (num != 0 && a > (~0ull) / num)
        return ~0ull;
    return a * num / den;
}

unsigned long long subset_count(long pool, long max_size) {
    // sum of C(pool, i) for i = 0..max_size, saturating
    if (max_size >= pool) {
        if (pool >= 64)
            return ~0ull;
        return 1ull << pool;
    }
    unsigned long long total = 0, binom = 1;
    for (long i = 0;; ++i) {
        total = sat_add(total, binom);
        if (i == max_size || total == ~0ull)
            break;
        binom = sat_mul_div(binom, static_cast<unsigned long long>(pool - i),
                            static_cast<unsigned long long>(i + 1));
        if (binom == ~0ull)
            return ~0ull;
    }
    return total;
}

std::vector<int> action_pool(const ControlInstance& inst, long& max_size) {
    const Election& e = inst.election;
    std::vector<int> pool;
    switch (ActionEvaluator::kind_of(inst.code)) {
    case ActionKind::AddC:
        for (const CandidateId& s : inst.spoilers)
            pool.push_back(e.candidate_index(s));
        std::sort(pool.begin(), pool.end());
        max_size = has_unlimited_budget(inst.code)
                       ? static_cast<long>(pool.size())
                       : std::min<long>(*inst.budget, static_cast<long>(pool.size()));
        break;
    case ActionKind::DelC:
        for (int c = 0; c < e.num_candidates(); ++c)
            if (inst.code != ControlType::DCDC || c != e.candidate_index(inst.designated))
                pool.push_back(c);
        max_size = std::min<long>(*inst.budget, static_cast<long>(pool.size()));
        break;
    case ActionKind::AddV:
        for (long f = 0; f < flattened_vote_count(inst.unregistered); ++f)
            pool.push_back(static_cast<int>(f));
        max_size = std::min<long>(*inst.budget, static_cast<long>(pool.size()));
        break;
    case ActionKind::DelV:
        for (long f = 0; f < flattened_vote_count(e); ++f)
            pool.push_back(static_cast<int>(f));
        max_size = std::min<long>(*inst.budget, static_cast<long>(pool.size()));
        break;
    case ActionKind::PartV:
        for (long f = 0; f < flattened_vote_count(e); ++f)
            pool.push_back(static_cast<int>(f));
        max_size = static_cast<long>(pool.size());
        break;
    case ActionKind::PartC:
        for (int c = 0; c < e.num_candidates(); ++c)
            pool.push_back(c);
        max_size = static_cast<long>(pool.size());
        break;
    }
    return pool;
}

} // namespace

unsigned long long action_space_size(const ControlInstance& inst) {
    validate(inst);
    long max_size = 0;
    std::vector<int> pool = action_pool(inst, max_size);
    return subset_count(static_cast<long>(pool.size()), max_size);
}

ActionEnumerator::ActionEnumerator(const ControlInstance& inst) : inst_(&inst) {
    validate(inst);
    pool_ = action_pool(inst, max_size_);
}

bool ActionEnumerator::next() {
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        subset_.clear();
        return true;
    }
    int s = static_cast<int>(subset_.size());
    int n = static_cast<int>(pool_.size());
    for (int i = s - 1; i >= 0; --i) {
        if (subset_[i] < n - (s - i)) {
            ++subset_[i];
            for (int j = i + 1; j < s; ++j)
                subset_[j] = subset_[j - 1] + 1;
            return true;
        }
    }
    if (s >= max_size_) {
        done_ = true;
        return false;
    }
    subset_.resize(s + 1);
    for (int i = 0; i <= s; ++i)
        subset_[i] = i;
    return true;
}

ControlAction ActionEnumerator::current() const {
    return materialize(subset_);
}

ControlAction ActionEnumerator::materialize(const std::vector<int>& chosen) const {
    const Election& e = inst_->election;
    std::vector<int> values;
    values.reserve(chosen.size());
    for (int pos : chosen)
        values.push_back(pool_[pos]);
    switch (ActionEvaluator::kind_of(inst_->code)) {
    case ActionKind::AddC: {
        AddCandidates a;
        for (int c : values)
            a.added.push_back(e.candidates()[c]);
        return a;
    }
    case ActionKind::DelC: {
        DeleteCandidates a;
        for (int c : values)
            a.deleted.push_back(e.candidates()[c]);
        return a;
    }
    case ActionKind::AddV:
        return AddVoters{std::move(values)};
    case ActionKind::DelV:
        return DeleteVoters{std::move(values)};
    case ActionKind::PartV:
        return PartitionVoters{std::move(values)};
    case ActionKind::PartC: {
        PartitionCandidates a;
        for (int c : values)
            a.first_group.push_back(e.candidates()[c]);
        return a;
    }
    }
    throw input_error("unreachable action kind");
}

std::vector<ControlAction> legal_actions(const ControlInstance& inst, unsigned long long cap) {
    unsigned long long size = action_space_size(inst);
    if (size > cap)
        throw resource_limit_error("action space holds " + std::to_string(size) +
                                   " actions, above the cap of " + std::to_string(cap));
    std::vector<ControlAction> out;
    out.reserve(static_cast<std::size_t>(size));
    ActionEnumerator en(inst);
    while (en.next())
        out.push_back(en.current());
    return out;
}

} // namespace bvc
