#include "bvc/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bvc/rng.hpp"
#include "bvc/solvers.hpp"

namespace bvc {

namespace {

std::string fmt_set(const std::vector<CandidateId>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += s[i];
    }
    return out + "}";
}

std::string fmt_level(const std::optional<int>& l) {
    return l ? "level " + std::to_string(*l) : "no level";
}

const char* yn(bool b) { return b ? "YES" : "NO"; }

std::string hs_brief(const HittingSetInstance& hs) {
    std::string out = "sets ";
    for (std::size_t i = 0; i < hs.sets.size(); ++i) {
        if (i)
            out += ",";
        out += "{";
        for (std::size_t j = 0; j < hs.sets[i].size(); ++j) {
            if (j)
                out += " ";
            out += hs.elements[hs.sets[i][j]];
        }
        out += "}";
    }
    return out + " budget " + std::to_string(hs.budget);
}

std::string x3c_brief(const X3CInstance& x) {
    std::string out = "sets ";
    for (std::size_t i = 0; i < x.sets.size(); ++i) {
        if (i)
            out += ",";
        out += "{" + x.elements[x.sets[i][0]] + " " + x.elements[x.sets[i][1]] + " " +
               x.elements[x.sets[i][2]] + "}";
    }
    return out;
}

// counts a distinct-verdict failure or, on YES, re-applies witnesses
void check_agreement(const ControlInstance& inst, const Decision& dec, bool expected,
                     SweepStats& st, const std::string& what) {
    ++st.instances;
    if (dec.yes)
        ++st.yes_instances;
    if (dec.yes != expected) {
        st.failures.push_back(what + ": solver says " + yn(dec.yes) + ", oracle says " +
                              yn(expected));
        return;
    }
    if (!dec.yes)
        return;
    if (!dec.witness) {
        st.failures.push_back(what + ": YES verdict without a witness");
        return;
    }
    try {
        auto final_winners = apply_action(inst, *dec.witness);
        if (!goal_met(inst, final_winners)) {
            st.failures.push_back(what + ": returned witness does not reach the goal");
            return;
        }
        ++st.witnesses_checked;
    } catch (const std::exception& ex) {
        st.failures.push_back(what + ": returned witness rejected (" +
                              std::string(ex.what()) + ")");
    }
}

void check_translated_witness(const ControlInstance& inst, const ControlAction& action,
                              SweepStats& st, const std::string& what) {
    try {
        auto final_winners = apply_action(inst, action);
        if (!goal_met(inst, final_winners)) {
            st.failures.push_back(what + ": translated witness does not reach the goal");
            return;
        }
        ++st.witnesses_checked;
    } catch (const std::exception& ex) {
        st.failures.push_back(what + ": translated witness rejected (" +
                              std::string(ex.what()) + ")");
    }
}

unsigned long long choose_small(unsigned long long a, unsigned long long b) {
    if (b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

unsigned long long multiset_count(long t, long n) {
    return choose_small(static_cast<unsigned long long>(t + n - 1),
                        static_cast<unsigned long long>(n));
}

// non-decreasing index sequences of length n over 0..t-1
template <class Fn>
void for_each_multiset(long t, long n, Fn&& fn) {
    std::vector<int> seq(n, 0);
    if (n == 0) {
        fn(seq);
        return;
    }
    if (t <= 0)
        return;
    for (;;) {
        fn(seq);
        long i = n - 1;
        while (i >= 0 && seq[i] == t - 1)
            --i;
        if (i < 0)
            return;
        int v = seq[i] + 1;
        for (long j = i; j < n; ++j)
            seq[j] = v;
    }
}

// strictly increasing index sequences of length n over 0..t-1
template <class Fn>
void for_each_combination(long t, long n, Fn&& fn) {
    if (n > t)
        return;
    std::vector<int> seq(n);
    for (long i = 0; i < n; ++i)
        seq[i] = static_cast<int>(i);
    for (;;) {
        fn(seq);
        long i = n - 1;
        while (i >= 0 && seq[i] == t - n + i)
            --i;
        if (i < 0)
            return;
        ++seq[i];
        for (long j = i + 1; j < n; ++j)
            seq[j] = seq[j - 1] + 1;
    }
}

std::vector<int> sample_multiset(std::mt19937_64& rng, long t, long n) {
    std::vector<int> seq(n);
    for (long i = 0; i < n; ++i)
        seq[i] = static_cast<int>(rng_range(rng, 0, t - 1));
    std::sort(seq.begin(), seq.end());
    return seq;
}

std::vector<int> sample_combination(std::mt19937_64& rng, long t, long n) {
    std::vector<int> idx(t);
    for (long i = 0; i < t; ++i)
        idx[i] = static_cast<int>(i);
    for (long i = 0; i < n; ++i)
        std::swap(idx[i], idx[rng_range(rng, i, t - 1)]);
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<std::vector<int>> all_nonempty_subsets(long m) {
    std::vector<std::vector<int>> out;
    for (long mask = 1; mask < (1l << m); ++mask) {
        std::vector<int> s;
        for (long b = 0; b < m; ++b)
            if (mask & (1l << b))
                s.push_back(static_cast<int>(b));
        out.push_back(std::move(s));
    }
    return out;
}

HittingSetInstance make_hs(long m, const std::vector<std::vector<int>>& subsets,
                           const std::vector<int>& seq, long k) {
    HittingSetInstance hs;
    for (long j = 1; j <= m; ++j)
        hs.elements.push_back("b" + std::to_string(j));
    for (int i : seq)
        hs.sets.push_back(subsets[i]);
    hs.budget = k;
    return hs;
}

std::vector<int> random_perm(std::mt19937_64& rng, long m) {
    std::vector<int> p(m);
    for (long i = 0; i < m; ++i)
        p[i] = static_cast<int>(i);
    for (long i = m - 1; i > 0; --i)
        std::swap(p[i], p[rng_range(rng, 0, i)]);
    return p;
}

std::vector<std::vector<int>> all_perms(long m) {
    std::vector<int> p(m);
    for (long i = 0; i < m; ++i)
        p[i] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

const std::vector<CandidateId>& small_alphabet() {
    static const std::vector<CandidateId> names = {"a", "b", "c", "d", "e"};
    return names;
}

std::string ranking_brief(const Election& e, const std::vector<int>& ranking) {
    std::string out;
    for (int c : ranking)
        out += e.candidates()[c];
    return out;
}

std::string votes_brief(const Election& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.votes().size(); ++i) {
        if (i)
            out += " ";
        out += std::to_string(e.votes()[i].multiplicity) + "x" +
               ranking_brief(e, e.votes()[i].ranking);
    }
    return out + "]";
}

} // namespace

void SweepStats::merge(const SweepStats& o) {
    instances += o.instances;
    yes_instances += o.yes_instances;
    witnesses_checked += o.witnesses_checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

std::vector<CheckResult> check_fixture(const Fixture& f) {
    std::vector<CheckResult> out;
    for (const OutcomeCheck& oc : f.outcome_checks) {
        CheckResult r{oc.id, false, ""};
        try {
            Election e = oc.restrict_to.empty() ? f.election
                                                : restrict_to(f.election, oc.restrict_to);
            BucklinOutcome got = bucklin_outcome(e);
            bool ok = got.winning_level == oc.expected_level &&
                      got.winners == oc.expected_winners;
            std::string score_note;
            for (const ScoreCheck& sc : oc.expected_scores) {
                long s = level_score(e, sc.candidate, sc.level);
                if (s != sc.score) {
                    ok = false;
                    score_note += ", " + sc.candidate + " scores " + std::to_string(s) +
                                  " at level " + std::to_string(sc.level) + " (want " +
                                  std::to_string(sc.score) + ")";
                }
            }
            r.pass = ok;
            r.detail = "winners " + fmt_set(got.winners) + " at " + fmt_level(got.winning_level);
            if (!ok)
                r.detail += ", expected " + fmt_set(oc.expected_winners) + " at " +
                            fmt_level(oc.expected_level) + score_note;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = ex.what();
        }
        out.push_back(std::move(r));
    }
    for (const ActionCheck& ac : f.action_checks) {
        CheckResult r{ac.id, false, ""};
        try {
            ControlInstance inst;
            inst.code = ac.code;
            inst.designated = ac.designated;
            inst.election = f.election;
            std::vector<CandidateId> fin;
            std::optional<TwoStageTrace> tr;
            if (is_partition(ac.code)) {
                tr = trace_partition(inst, ac.action);
                fin = tr->final_winners;
            } else {
                fin = apply_action(inst, ac.action);
            }
            bool ok = fin == ac.expected_final &&
                      goal_met(inst, fin) == ac.expected_goal_met;
            if (tr && ac.expected_stage1 && tr->stage1_winners != *ac.expected_stage1)
                ok = false;
            if (tr && ac.expected_stage2 && tr->stage2_winners != *ac.expected_stage2)
                ok = false;
            r.pass = ok;
            r.detail = "final " + fmt_set(fin);
            if (tr)
                r.detail += ", stage winners " + fmt_set(tr->stage1_winners) + " and " +
                            fmt_set(tr->stage2_winners);
            if (!ok)
                r.detail += ", expected final " + fmt_set(ac.expected_final);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = ex.what();
        }
        out.push_back(std::move(r));
    }
    for (const Scenario& sc : f.scenarios) {
        CheckResult r{sc.id, false, ""};
        try {
            Decision d = decide_brute_force(sc.instance);
            r.pass = d.yes == sc.expected_yes;
            r.detail = std::string("verdict ") + yn(d.yes);
            if (!r.pass)
                r.detail += std::string(", expected ") + yn(sc.expected_yes);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = ex.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_lemma6_formulas(long n, long m, long k) {
    if (!(n > m && m > k && k >= 1))
        throw input_error("score formulas require n > m > k >= 1");
    HittingSetInstance hs;
    for (long j = 1; j <= m; ++j)
        hs.elements.push_back("b" + std::to_string(j));
    for (long i = 0; i < n; ++i)
        hs.sets.push_back({static_cast<int>(i % m)});
    hs.budget = k;
    Construction1 built = build_construction1(as_restricted(std::move(hs)));

    const CandidateId c = built.layout.pool("c")[0];
    const CandidateId d = built.layout.pool("d")[0];
    const CandidateId w = built.layout.pool("w")[0];
    Election r = restrict_to(built.election, {c, d, w});
    long sc = level_score(r, c, 2);
    long sd = level_score(r, d, 2);
    long sw = level_score(r, w, 2);
    long fc = 6 * n * (k + 1) + 2 * (m - k) + 9;
    long fd = 2 * n * (k + 1) + 4 * m + 2 * k + 3;
    long fw = 4 * n * (k + 1) + 2 * m + 10;

    auto cmp = [](const std::string& id, long measured, long expected) {
        return CheckResult{id, measured == expected,
                           "measured " + std::to_string(measured) + ", closed form " +
                               std::to_string(expected)};
    };
    std::vector<CheckResult> out;
    out.push_back(cmp("level2-score-c", sc, fc));
    out.push_back(cmp("level2-score-d", sd, fd));
    out.push_back(cmp("level2-score-w", sw, fw));
    out.push_back({"margin-c-over-d", sc > sd,
                   "c leads d by " + std::to_string(sc - sd)});
    out.push_back({"margin-c-over-w", sc > sw,
                   "c leads w by " + std::to_string(sc - sw)});
    return out;
}

SweepStats sweep_construction1(long max_m, long max_n, long per_cell,
                               unsigned long long seed) {
    SweepStats st;
    std::mt19937_64 rng(seed);
    const ControlType codes[] = {
        ControlType::CCAC_U,  ControlType::CCAC_L,  ControlType::DCAC_U,
        ControlType::DCAC_L,  ControlType::DCDC,    ControlType::CCPC_TE,
        ControlType::CCPC_TP, ControlType::DCPC_TE, ControlType::DCPC_TP,
        ControlType::CCRPC_TE, ControlType::CCRPC_TP, ControlType::DCRPC_TE,
        ControlType::DCRPC_TP};
    for (long m = 2; m <= max_m; ++m) {
        auto subsets = all_nonempty_subsets(m);
        long t = static_cast<long>(subsets.size());
        for (long n = m + 1; n <= max_n; ++n) {
            for (long k = 1; k < m; ++k) {
                auto handle = [&](const std::vector<int>& seq) {
                    HittingSetInstance hs = make_hs(m, subsets, seq, k);
                    auto sol = solve_hitting_set(hs);
                    Construction1 built = build_construction1(as_restricted(hs));
                    for (ControlType code : codes) {
                        ControlInstance inst = wrap_construction1(built, code);
                        Decision dec = decide_brute_force(inst);
                        std::string what = "candidate-control " + to_string(code) + " on " +
                                           hs_brief(hs);
                        check_agreement(inst, dec, sol.has_value(), st, what);
                        if (dec.yes == sol.has_value() && sol)
                            check_translated_witness(
                                inst, construction1_witness(built, code, *sol), st, what);
                    }
                };
                if (multiset_count(t, n) <= static_cast<unsigned long long>(per_cell))
                    for_each_multiset(t, n, handle);
                else
                    for (long i = 0; i < per_cell; ++i)
                        handle(sample_multiset(rng, t, n));
            }
        }
    }
    return st;
}

SweepStats sweep_ccdc(long max_m, long max_n, long max_k) {
    SweepStats st;
    for (long m = 1; m <= max_m; ++m) {
        auto subsets = all_nonempty_subsets(m);
        long t = static_cast<long>(subsets.size());
        for (long n = 2; n <= max_n; ++n) {
            for (long k = 1; k <= std::min(max_k, m); ++k) {
                for_each_multiset(t, n, [&](const std::vector<int>& seq) {
                    for (int i : seq)
                        if (static_cast<long>(subsets[i].size()) > n + k)
                            return; // outside the generator's domain
                    HittingSetInstance hs = make_hs(m, subsets, seq, k);
                    auto sol = solve_hitting_set(hs);
                    CcdcReduction red = hs_to_ccdc(hs);
                    std::string what = "deleting-candidates on " + hs_brief(hs);

                    BucklinOutcome oc = bucklin_outcome(red.instance.election);
                    if (!(oc.winning_level && *oc.winning_level == n + k + 1 &&
                          oc.winners.size() >= 2))
                        st.failures.push_back(
                            what + ": uncontrolled winners " + fmt_set(oc.winners) + " at " +
                            fmt_level(oc.winning_level) + ", expected a tie of at least two "
                            "at level " + std::to_string(n + k + 1));

                    Decision dec = decide_brute_force(red.instance);
                    check_agreement(red.instance, dec, sol.has_value(), st, what);
                    if (dec.yes == sol.has_value() && sol)
                        check_translated_witness(red.instance, ccdc_witness(red, *sol), st,
                                                 what);
                });
            }
        }
    }
    return st;
}

namespace {

// enumerate or sample collections of distinct 3-subsets of a 6-element
// universe, solve each with the exact-cover oracle, and hand off
template <class Fn>
SweepStats x3c_collections(long max_sets, long cap, unsigned long long seed, Fn&& fn) {
    SweepStats st;
    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                triples.push_back({a, b, c});
    long t = static_cast<long>(triples.size());
    std::vector<std::string> elems;
    for (int j = 1; j <= 6; ++j)
        elems.push_back("b" + std::to_string(j));

    auto handle = [&](const std::vector<int>& combo) {
        X3CInstance x;
        x.elements = elems;
        for (int i : combo)
            x.sets.push_back(triples[i]);
        auto sol = solve_x3c(x);
        fn(x, sol, st);
    };
    for (long n = 1; n <= max_sets; ++n) {
        if (choose_small(t, n) <= static_cast<unsigned long long>(cap))
            for_each_combination(t, n, handle);
        else
            for (long i = 0; i < cap; ++i)
                handle(sample_combination(rng, t, n));
    }
    return st;
}

} // namespace

SweepStats sweep_ccav(long max_sets, long cap, unsigned long long seed) {
    return x3c_collections(max_sets, cap, seed,
                           [](const X3CInstance& x, const std::optional<std::vector<int>>& sol,
                              SweepStats& st) {
        CcavReduction red = x3c_to_ccav(x);
        std::string what = "adding-voters on " + x3c_brief(x);
        Decision dec = decide_brute_force(red.instance);
        check_agreement(red.instance, dec, sol.has_value(), st, what);
        if (dec.yes == sol.has_value() && sol)
            check_translated_witness(red.instance, ccav_witness(red, *sol), st, what);
    });
}

SweepStats sweep_ccdv(long max_sets, long cap, unsigned long long seed) {
    return x3c_collections(max_sets, cap, seed,
                           [](const X3CInstance& x, const std::optional<std::vector<int>>& sol,
                              SweepStats& st) {
        CcdvReduction red = x3c_to_ccdv(x);
        std::string what = "deleting-voters on " + x3c_brief(x);

        BucklinOutcome oc = bucklin_outcome(red.instance.election);
        const CandidateId& c = red.layout.pool("c")[0];
        if (!(oc.winning_level && *oc.winning_level == 4 &&
              oc.winners == std::vector<CandidateId>{c}))
            st.failures.push_back(what + ": uncontrolled winners " + fmt_set(oc.winners) +
                                  " at " + fmt_level(oc.winning_level) + ", expected {" + c +
                                  "} at level 4");

        Decision dec = decide_brute_force(red.instance);
        check_agreement(red.instance, dec, sol.has_value(), st, what);
        if (dec.yes == sol.has_value() && sol)
            check_translated_witness(red.instance, ccdv_witness(red, *sol), st, what);
    });
}

SweepStats sweep_ccpv(TieRule rule, long max_sets, long cap, unsigned long long seed) {
    return x3c_collections(max_sets, cap, seed,
                           [rule](const X3CInstance& x,
                                  const std::optional<std::vector<int>>& sol, SweepStats& st) {
        CcpvReduction red = x3c_to_ccpv(x, rule);
        std::string what = std::string("voter-partition ") +
                           (rule == TieRule::TE ? "TE" : "TP") + " on " + x3c_brief(x);
        long n = static_cast<long>(x.sets.size());
        long em = static_cast<long>(x.elements.size()) / 3;

        BucklinOutcome oc = bucklin_outcome(red.instance.election);
        const CandidateId& c = red.layout.pool("c")[0];
        long c_score = level_score(red.instance.election, c, 2);
        if (!(oc.winning_level && *oc.winning_level == 2 &&
              oc.winners == std::vector<CandidateId>{c} && c_score == n + em + 1))
            st.failures.push_back(what + ": uncontrolled winners " + fmt_set(oc.winners) +
                                  " at " + fmt_level(oc.winning_level) +
                                  ", expected {" + c + "} at level 2 with score " +
                                  std::to_string(n + em + 1));

        Decision dec = decide_brute_force(red.instance);
        check_agreement(red.instance, dec, sol.has_value(), st, what);
        if (dec.yes == sol.has_value() && sol)
            check_translated_witness(red.instance, ccpv_witness(red, *sol), st, what);
    });
}

SweepStats sweep_poly_exhaustive_dcav() {
    SweepStats st;
    for (int m = 1; m <= 3; ++m) {
    std::vector<std::vector<int>> perms = all_perms(m);
    const std::vector<CandidateId> names(small_alphabet().begin(),
                                         small_alphabet().begin() + m);
    long t = static_cast<long>(perms.size());
    for (long nv = 0; nv <= 3; ++nv) {
        for_each_multiset(t, nv, [&](const std::vector<int>& vseq) {
            for (long np = 0; np <= 2; ++np) {
                for_each_multiset(t, np, [&](const std::vector<int>& pseq) {
                    std::vector<Vote> votes, pool;
                    for (int i : vseq)
                        votes.push_back(Vote{1, perms[i]});
                    for (int i : pseq)
                        pool.push_back(Vote{1, perms[i]});
                    for (int des = 0; des < m; ++des) {
                        for (long budget = 0; budget <= 3; ++budget) {
                            ControlInstance inst;
                            inst.code = ControlType::DCAV;
                            inst.designated = names[des];
                            inst.election = Election(names, votes);
                            inst.unregistered = pool;
                            inst.budget = budget;
                            Decision p = decide_dc_adding_voters(inst);
                            Decision b = decide_brute_force(inst);
                            ++st.instances;
                            if (p.yes)
                                ++st.yes_instances;
                            if (p.yes != b.yes) {
                                st.failures.push_back(
                                    "DCAV registered " + votes_brief(inst.election) +
                                    " pool of " + std::to_string(pool.size()) +
                                    " designated " + names[des] + " budget " +
                                    std::to_string(budget) + ": fast " + yn(p.yes) +
                                    ", brute " + yn(b.yes));
                                continue;
                            }
                            if (p.yes) {
                                auto fin = apply_action(inst, *p.witness);
                                if (!goal_met(inst, fin))
                                    st.failures.push_back("DCAV witness failed for " +
                                                          votes_brief(inst.election));
                                else
                                    ++st.witnesses_checked;
                            }
                        }
                    }
                });
            }
        });
    }
    }
    return st;
}

SweepStats sweep_poly_exhaustive_dcdv() {
    SweepStats st;
    for (int m = 1; m <= 3; ++m) {
    std::vector<std::vector<int>> perms = all_perms(m);
    const std::vector<CandidateId> names(small_alphabet().begin(),
                                         small_alphabet().begin() + m);
    long t = static_cast<long>(perms.size());
    for (long nv = 0; nv <= 5; ++nv) {
        for_each_multiset(t, nv, [&](const std::vector<int>& vseq) {
            std::vector<Vote> votes;
            for (int i : vseq)
                votes.push_back(Vote{1, perms[i]});
            for (int des = 0; des < m; ++des) {
                for (long budget = 0; budget <= 6; ++budget) {
                    ControlInstance inst;
                    inst.code = ControlType::DCDV;
                    inst.designated = names[des];
                    inst.election = Election(names, votes);
                    inst.budget = budget;
                    Decision p = decide_dc_deleting_voters(inst);
                    Decision b = decide_brute_force(inst);
                    ++st.instances;
                    if (p.yes)
                        ++st.yes_instances;
                    if (p.yes != b.yes) {
                        st.failures.push_back(
                            "DCDV registered " + votes_brief(inst.election) + " designated " +
                            names[des] + " budget " + std::to_string(budget) + ": fast " +
                            yn(p.yes) + ", brute " + yn(b.yes));
                        continue;
                    }
                    if (p.yes) {
                        auto fin = apply_action(inst, *p.witness);
                        if (!goal_met(inst, fin))
                            st.failures.push_back("DCDV witness failed for " +
                                                  votes_brief(inst.election));
                        else
                            ++st.witnesses_checked;
                    }
                }
            }
        });
    }
    }
    return st;
}

SweepStats sweep_poly_random(long count, unsigned long long seed) {
    SweepStats st;
    std::mt19937_64 rng(seed);
    for (long trial = 0; trial < count; ++trial) {
        long m = rng_range(rng, 1, 5);
        std::vector<CandidateId> names(small_alphabet().begin(),
                                       small_alphabet().begin() + m);
        std::vector<Vote> votes;
        long remaining = rng_range(rng, 0, 7);
        while (remaining > 0) {
            long mult = rng_range(rng, 1, std::min<long>(3, remaining));
            votes.push_back(Vote{mult, random_perm(rng, m)});
            remaining -= mult;
        }
        bool adding = rng_range(rng, 0, 1) == 1;

        ControlInstance inst;
        inst.code = adding ? ControlType::DCAV : ControlType::DCDV;
        inst.designated = names[rng_range(rng, 0, m - 1)];
        inst.election = Election(names, votes);
        inst.budget = rng_range(rng, 0, 3);
        if (adding) {
            long pool = rng_range(rng, 0, 4);
            while (pool > 0) {
                long mult = rng_range(rng, 1, std::min<long>(2, pool));
                inst.unregistered.push_back(Vote{mult, random_perm(rng, m)});
                pool -= mult;
            }
        }

        Decision p = adding ? decide_dc_adding_voters(inst) : decide_dc_deleting_voters(inst);
        Decision b = decide_brute_force(inst);
        ++st.instances;
        if (p.yes)
            ++st.yes_instances;
        std::string what = std::string(adding ? "DCAV" : "DCDV") + " trial #" +
                           std::to_string(trial) + " " + votes_brief(inst.election) +
                           " designated " + inst.designated + " budget " +
                           std::to_string(*inst.budget);
        if (p.yes != b.yes) {
            st.failures.push_back(what + ": fast " + yn(p.yes) + ", brute " + yn(b.yes));
            continue;
        }
        if (p.yes) {
            auto fin = apply_action(inst, *p.witness);
            if (!goal_met(inst, fin))
                st.failures.push_back(what + ": fast witness failed");
            else
                ++st.witnesses_checked;
        }
    }
    return st;
}

SweepStats sweep_hs_to_rhs(long max_m, long max_n) {
    SweepStats st;
    for (long m = 1; m <= max_m; ++m) {
        auto subsets = all_nonempty_subsets(m);
        long t = static_cast<long>(subsets.size());
        for (long n = 1; n <= max_n; ++n) {
            for (long k = 1; k <= m; ++k) {
                for_each_multiset(t, n, [&](const std::vector<int>& seq) {
                    HittingSetInstance hs = make_hs(m, subsets, seq, k);
                    bool expected = solve_hitting_set(hs).has_value();
                    HsToRhsResult res = hs_to_rhs(hs);
                    const HittingSetInstance& out = res.instance.hs;
                    ++st.instances;
                    if (expected)
                        ++st.yes_instances;
                    std::string what = "repair of " + hs_brief(hs);
                    long nn = static_cast<long>(out.sets.size());
                    long mm = static_cast<long>(out.elements.size());
                    if (!(nn > mm && out.budget >= 1 && out.budget < mm)) {
                        st.failures.push_back(what + ": result is not in restricted shape");
                        return;
                    }
                    bool got = solve_hitting_set(out).has_value();
                    if (res.trivial_yes_shortcut) {
                        if (!expected || !got)
                            st.failures.push_back(what + ": shortcut taken but source is " +
                                                  yn(expected) + " and result is " + yn(got));
                    } else if (got != expected) {
                        st.failures.push_back(what + ": source " + yn(expected) +
                                              ", repaired " + yn(got));
                    }
                });
            }
        }
    }
    return st;
}

SweepStats sweep_properties(long num_elections, unsigned long long seed) {
    SweepStats st;
    std::mt19937_64 rng(seed);
    for (long trial = 0; trial < num_elections; ++trial) {
        long m = rng_range(rng, 1, 5);
        std::vector<CandidateId> names(small_alphabet().begin(),
                                       small_alphabet().begin() + m);
        long entries = rng_range(rng, 0, 5);
        std::vector<Vote> votes;
        for (long i = 0; i < entries; ++i)
            votes.push_back(Vote{rng_range(rng, 1, 3), random_perm(rng, m)});
        Election e(names, votes);
        BucklinOutcome oc = bucklin_outcome(e);
        long total = e.total_votes();
        long maj = majority_threshold(total);
        std::string tag = "election #" + std::to_string(trial) + " " + votes_brief(e);
        auto fail = [&](const std::string& prop, const std::string& why) {
            st.failures.push_back(prop + " on " + tag + ": " + why);
        };

        // 1. per-candidate level scores are nondecreasing, bounded by the vote
        //    count, and saturate at the last level
        ++st.instances;
        for (long ci = 0; ci < m; ++ci) {
            long prev = 0;
            for (int level = 1; level <= m; ++level) {
                long s = level_score(e, names[ci], level);
                if (s < prev || s < 0 || s > total)
                    fail("score-monotonicity", names[ci] + " at level " +
                         std::to_string(level));
                prev = s;
            }
            if (prev != total)
                fail("score-monotonicity", names[ci] + " does not reach the vote count");
        }

        // 2. level scores column-sum to level * votes
        ++st.instances;
        for (int level = 1; level <= m; ++level) {
            long sum = 0;
            for (long ci = 0; ci < m; ++ci)
                sum += level_score(e, names[ci], level);
            if (sum != static_cast<long>(level) * total)
                fail("score-column-sum", "level " + std::to_string(level) + " sums to " +
                     std::to_string(sum));
        }

        // 3. a level-1 win is always unique
        ++st.instances;
        if (oc.winning_level && *oc.winning_level == 1 && oc.winners.size() != 1)
            fail("level1-uniqueness", fmt_set(oc.winners));

        // 4. a strict-majority favourite wins alone at level 1
        ++st.instances;
        for (long ci = 0; ci < m; ++ci)
            if (total > 0 && level_score(e, names[ci], 1) >= maj) {
                if (!(oc.winning_level && *oc.winning_level == 1 &&
                      oc.winners == std::vector<CandidateId>{names[ci]}))
                    fail("majority-consistency", names[ci] + " holds a majority but " +
                         fmt_set(oc.winners) + " won");
            }

        // 5. someone wins iff there is at least one vote
        ++st.instances;
        if (total > 0 && (!oc.winning_level || oc.winners.empty()))
            fail("voiced", "no winner despite " + std::to_string(total) + " votes");
        if (total == 0 && (oc.winning_level || !oc.winners.empty()))
            fail("voiced", "winner on zero votes");

        // 6. restriction agrees with the masked evaluator
        ++st.instances;
        {
            unsigned long long bits = rng_below(rng, 1ull << m);
            if (bits == 0)
                bits = (1ull << m) - 1;
            std::vector<CandidateId> kept;
            std::vector<char> keep(m, 0);
            for (long ci = 0; ci < m; ++ci)
                if (bits & (1ull << ci)) {
                    kept.push_back(names[ci]);
                    keep[ci] = 1;
                }
            Election r = restrict_to(e, kept);
            BucklinOutcome ro = bucklin_outcome(r);
            SubelectionEvaluator ev(e);
            std::vector<int> win;
            int lvl = ev.winners_full(keep, win);
            std::vector<CandidateId> win_names = e.indices_to_ranking(win);
            if (r.total_votes() != total)
                fail("restriction-coherence", "vote count changed");
            if (win_names != ro.winners ||
                lvl != (ro.winning_level ? *ro.winning_level : 0))
                fail("restriction-coherence", "mask gives " + fmt_set(win_names) +
                     " at level " + std::to_string(lvl) + ", rebuild gives " +
                     fmt_set(ro.winners) + " at " + fmt_level(ro.winning_level));
            for (const CandidateId& cid : ro.winners)
                if (std::find(kept.begin(), kept.end(), cid) == kept.end())
                    fail("restriction-coherence", "winner outside kept set");
        }
    }
    return st;
}

namespace {

void corrupt(Fixture& f) {
    if (!f.outcome_checks.empty()) {
        f.outcome_checks[0].expected_winners = {"nobody-by-this-name"};
        return;
    }
    if (!f.action_checks.empty())
        f.action_checks[0].expected_goal_met = !f.action_checks[0].expected_goal_met;
}

} // namespace

VerifyReport run_verification_suite(const VerifyConfig& config) {
    VerifyReport rep;
    auto add = [&](CheckResult r) {
        if (r.pass)
            ++rep.passed;
        else
            ++rep.failed;
        rep.checks.push_back(std::move(r));
    };
    auto add_sweep = [&](const std::string& id, const SweepStats& s) {
        if (s.failures.empty()) {
            add({id, true,
                 std::to_string(s.instances) + " checks, " +
                     std::to_string(s.yes_instances) + " yes, " +
                     std::to_string(s.witnesses_checked) + " witnesses verified"});
        } else {
            for (std::size_t i = 0; i < s.failures.size(); ++i)
                add({id + "#" + std::to_string(i), false, s.failures[i]});
        }
    };
    if (config.max_n <= 0)
        return rep;
    auto want = [&](const char* s) {
        return config.suites.empty() || config.suites.count("all") || config.suites.count(s);
    };

    if (want("fixtures")) {
        for (const std::string& name : fixture_names()) {
            Fixture f = fixture(name);
            if (config.corrupt_fixture == name)
                corrupt(f);
            for (CheckResult& r : check_fixture(f))
                add({"fixtures/" + name + "/" + r.id, r.pass, r.detail});
        }
    }
    if (want("formulas")) {
        for (long n = 3; n <= config.max_n; ++n)
            for (long m = 2; m < n; ++m)
                for (long k = 1; k < m; ++k) {
                    std::string cell = "formulas/n" + std::to_string(n) + "m" +
                                       std::to_string(m) + "k" + std::to_string(k) + "/";
                    for (CheckResult& r : check_lemma6_formulas(n, m, k))
                        add({cell + r.id, r.pass, r.detail});
                }
    }
    if (want("reductions")) {
        add_sweep("reductions/candidate-control",
                  sweep_construction1(std::min<long>(3, config.max_n - 1), config.max_n,
                                      config.instance_cap, config.seed));
        add_sweep("reductions/deleting-candidates",
                  sweep_ccdc(std::min<long>(3, config.max_n), std::min<long>(3, config.max_n),
                             2));
        add_sweep("reductions/adding-voters",
                  sweep_ccav(config.max_n, config.instance_cap, config.seed + 1));
        add_sweep("reductions/deleting-voters",
                  sweep_ccdv(config.max_n, config.instance_cap, config.seed + 2));
        add_sweep("reductions/voter-partition-te",
                  sweep_ccpv(TieRule::TE, std::min<long>(3, config.max_n),
                             std::min<long>(40, config.instance_cap), config.seed + 3));
        add_sweep("reductions/voter-partition-tp",
                  sweep_ccpv(TieRule::TP, std::min<long>(3, config.max_n),
                             std::min<long>(40, config.instance_cap), config.seed + 4));
        add_sweep("reductions/hitting-set-repair",
                  sweep_hs_to_rhs(std::min<long>(3, config.max_n),
                                  std::min<long>(3, config.max_n)));
    }
    if (want("poly")) {
        add_sweep("poly/dcav-exhaustive", sweep_poly_exhaustive_dcav());
        add_sweep("poly/dcdv-exhaustive", sweep_poly_exhaustive_dcdv());
        add_sweep("poly/random", sweep_poly_random(5 * config.instance_cap, config.seed + 5));
    }
    if (want("properties")) {
        add_sweep("properties/scoring",
                  sweep_properties(5 * config.instance_cap, config.seed + 6));
    }
    return rep;
}

std::string to_text(const VerifyReport& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id;
        if (!c.detail.empty())
            os << " " << c.detail;
        os << "\n";
    }
    return os.str();
}

} // namespace bvc
