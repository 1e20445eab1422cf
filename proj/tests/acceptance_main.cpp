// Acceptance gate: ten numbered criteria, one PASS/FAIL line each, exit 0
// only when every criterion holds. Timing per criterion is informational.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bvc/election.hpp"
#include "bvc/fixtures.hpp"
#include "bvc/io.hpp"
#include "bvc/reductions.hpp"
#include "bvc/solvers.hpp"
#include "bvc/verify.hpp"

using namespace bvc;

namespace {

constexpr unsigned long long kSeed = 20260814;

struct Criterion {
    bool ok = true;
    std::string detail;

    // keeps the first failure; later ones add no information worth the noise
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = "failed: " + what;
        }
    }
    void note(const std::string& text) {
        if (ok)
            detail = text;
    }
    void absorb(const SweepStats& s, long& witnesses) {
        witnesses += s.witnesses_checked;
        if (!s.failures.empty())
            require(false, s.failures.front());
    }
};

// nondecreasing index sequences of length n over 0..t-1, at most cap of them
template <class Fn>
void first_multisets(long t, long n, long cap, Fn&& fn) {
    std::vector<int> seq(n, 0);
    long emitted = 0;
    while (emitted < cap) {
        fn(seq);
        ++emitted;
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

// strictly increasing index sequences of length n over 0..t-1, at most cap
template <class Fn>
void first_combinations(long t, long n, long cap, Fn&& fn) {
    if (n > t)
        return;
    std::vector<int> seq(n);
    for (long i = 0; i < n; ++i)
        seq[i] = static_cast<int>(i);
    long emitted = 0;
    while (emitted < cap) {
        fn(seq);
        ++emitted;
        long i = n - 1;
        while (i >= 0 && seq[i] == t - (n - i))
            --i;
        if (i < 0)
            return;
        ++seq[i];
        for (long j = i + 1; j < n; ++j)
            seq[j] = seq[j - 1] + 1;
    }
}

std::vector<std::vector<int>> nonempty_subsets(long m) {
    std::vector<std::vector<int>> out;
    for (long mask = 1; mask < (1l << m); ++mask) {
        std::vector<int> s;
        for (long j = 0; j < m; ++j)
            if (mask & (1l << j))
                s.push_back(static_cast<int>(j));
        out.push_back(std::move(s));
    }
    return out;
}

HittingSetInstance hs_from(long m, const std::vector<std::vector<int>>& subsets,
                           const std::vector<int>& seq, long k) {
    HittingSetInstance hs;
    for (long j = 1; j <= m; ++j)
        hs.elements.push_back("b" + std::to_string(j));
    for (int i : seq)
        hs.sets.push_back(subsets[i]);
    hs.budget = k;
    return hs;
}

bool control_roundtrips(const ControlInstance& inst) {
    return parse_control_instance(serialize_control_instance(inst)) == inst;
}

} // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    long witnesses_in_sweeps = 0;
    int failed = 0;

    auto run = [&](int number, const std::string& title,
                   const std::function<void(Criterion&)>& body) {
        Criterion c;
        auto t0 = Clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (!c.ok)
            ++failed;
        std::printf("%s %2d %s: %s (%.0f ms)\n", c.ok ? "PASS" : "FAIL", number,
                    title.c_str(), c.detail.c_str(), ms);
        std::fflush(stdout);
    };

    run(1, "worked example and its restriction", [](Criterion& c) {
        Election e = fixture("prop1").election;
        BucklinOutcome full = bucklin_outcome(e);
        c.require(full.winners == std::vector<CandidateId>{"a"}, "full winners are {a}");
        c.require(full.winning_level == 2, "full winning level is 2");
        c.require(level_score(e, "a", 2) == 4, "a scores 4 at level 2");
        Election r = restrict_to(e, {"a", "c", "d"});
        BucklinOutcome part = bucklin_outcome(r);
        c.require(part.winners == std::vector<CandidateId>{"c"},
                  "restricted winners are {c}");
        c.require(level_score(r, "c", 2) == 5 && level_score(r, "a", 2) == 4,
                  "restricted level-2 scores are c=5, a=4");
        c.note("unique winner flips from a to c under the {a,c,d} restriction");
    });

    run(2, "stored partition fixtures", [](Criterion& c) {
        long checks = 0;
        for (const char* name : {"lemma2-candidate-partition", "lemma3-voter-partition"}) {
            for (const CheckResult& r : check_fixture(fixture(name))) {
                ++checks;
                c.require(r.pass, r.id + ": " + r.detail);
            }
        }
        c.note(std::to_string(checks) + " stage/final winner checks across both tie rules");
    });

    run(3, "closed-form scores of the candidate-control election", [](Criterion& c) {
        long cells = 0;
        for (long n = 3; n <= 6; ++n)
            for (long m = 2; m < n; ++m)
                for (long k = 1; k < m; ++k) {
                    ++cells;
                    for (const CheckResult& r : check_lemma6_formulas(n, m, k))
                        c.require(r.pass, r.id + ": " + r.detail);
                }
        c.note(std::to_string(cells) + " (n,m,k) shapes, scores and margins exact");
    });

    run(4, "candidate-control equivalence sweep", [&](Criterion& c) {
        SweepStats s = sweep_construction1(3, 5, 200, kSeed);
        c.absorb(s, witnesses_in_sweeps);
        c.require(s.instances > 0 && s.yes_instances > 0, "sweep is non-vacuous");
        c.note(std::to_string(s.instances) + " decisions across 13 control types, " +
               std::to_string(s.yes_instances) + " yes, " +
               std::to_string(s.witnesses_checked) + " witnesses verified");
    });

    run(5, "deleting-candidates equivalence sweep", [&](Criterion& c) {
        SweepStats s = sweep_ccdc(3, 3, 2);
        c.absorb(s, witnesses_in_sweeps);
        c.require(s.instances > 0 && s.yes_instances > 0, "sweep is non-vacuous");
        c.note(std::to_string(s.instances) +
               " instances, uncontrolled ties and verdicts all match, " +
               std::to_string(s.witnesses_checked) + " witnesses verified");
    });

    run(6, "voter-control equivalence sweeps", [&](Criterion& c) {
        SweepStats av = sweep_ccav(4, 500, kSeed + 1);
        SweepStats dv = sweep_ccdv(4, 500, kSeed + 2);
        SweepStats pte = sweep_ccpv(TieRule::TE, 4, 500, kSeed + 3);
        SweepStats ptp = sweep_ccpv(TieRule::TP, 4, 500, kSeed + 4);
        for (const SweepStats* s : {&av, &dv, &pte, &ptp}) {
            c.absorb(*s, witnesses_in_sweeps);
            c.require(s->instances > 0 && s->yes_instances > 0, "sweep is non-vacuous");
        }
        c.note("adding " + std::to_string(av.instances) + ", deleting " +
               std::to_string(dv.instances) + ", partition " +
               std::to_string(pte.instances + ptp.instances) +
               " decisions match the exact-cover oracle");
    });

    run(7, "fast deciders against brute force", [&](Criterion& c) {
        SweepStats a = sweep_poly_exhaustive_dcav();
        SweepStats d = sweep_poly_exhaustive_dcdv();
        SweepStats r = sweep_poly_random(1000, kSeed + 5);
        for (const SweepStats* s : {&a, &d, &r}) {
            c.absorb(*s, witnesses_in_sweeps);
            c.require(s->instances > 0 && s->yes_instances > 0, "sweep is non-vacuous");
        }
        c.note(std::to_string(a.instances + d.instances) + " exhaustive and " +
               std::to_string(r.instances) + " random instances agree");
    });

    run(8, "hitting-set repair preserves decisions", [&](Criterion& c) {
        SweepStats s = sweep_hs_to_rhs(3, 3);
        c.absorb(s, witnesses_in_sweeps);
        c.require(s.instances > 0, "sweep is non-vacuous");
        c.note(std::to_string(s.instances) + " sources repaired into the restricted shape");
    });

    run(9, "scoring properties and witness soundness", [&](Criterion& c) {
        SweepStats s = sweep_properties(1000, kSeed + 6);
        long ignore = 0;
        c.absorb(s, ignore);
        c.require(s.instances > 0, "sweep is non-vacuous");
        c.require(witnesses_in_sweeps > 0,
                  "equivalence sweeps re-checked at least one witness");
        c.note(std::to_string(s.instances) + " property checks, " +
               std::to_string(witnesses_in_sweeps) +
               " YES witnesses re-checked in criteria 4-7");
    });

    run(10, "serialization identity and generator determinism", [](Criterion& c) {
        long files = 0;
        auto take_election = [&](const Election& e) {
            ++files;
            c.require(parse_election(serialize_election(e)) == e, "election round-trip");
        };
        auto take_control = [&](const ControlInstance& inst) {
            ++files;
            c.require(control_roundtrips(inst), "control-instance round-trip");
        };

        for (const std::string& name : fixture_names()) {
            Fixture f = fixture(name);
            take_election(f.election);
            for (const Scenario& sc : f.scenarios)
                take_control(sc.instance);
        }

        // the candidate-control family over its full sweep domain
        for (long m = 2; m <= 3; ++m) {
            auto subsets = nonempty_subsets(m);
            long t = static_cast<long>(subsets.size());
            for (long n = m + 1; n <= 5; ++n)
                for (long k = 1; k < m; ++k)
                    first_multisets(t, n, 200, [&](const std::vector<int>& seq) {
                        auto rhs = as_restricted(hs_from(m, subsets, seq, k));
                        ++files;
                        c.require(parse_hitting_set(serialize_hitting_set(rhs.hs)) == rhs.hs,
                                  "hitting-set round-trip");
                        Construction1 built = build_construction1(rhs);
                        take_election(built.election);
                        for (ControlType code : kAllControlTypes)
                            if (construction1_supports(code))
                                take_control(wrap_construction1(built, code));
                    });
        }

        // the deleting-candidates family
        for (long m = 1; m <= 3; ++m) {
            auto subsets = nonempty_subsets(m);
            long t = static_cast<long>(subsets.size());
            for (long n = 2; n <= 3; ++n)
                for (long k = 1; k <= std::min<long>(2, m); ++k)
                    first_multisets(t, n, 200, [&](const std::vector<int>& seq) {
                        HittingSetInstance hs = hs_from(m, subsets, seq, k);
                        ++files;
                        c.require(parse_hitting_set(serialize_hitting_set(hs)) == hs,
                                  "hitting-set round-trip");
                        take_control(hs_to_ccdc(hs).instance);
                    });
        }

        // the exact-cover families over collections of distinct triples
        std::vector<std::array<int, 3>> triples;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int cc = b + 1; cc < 6; ++cc)
                    triples.push_back({a, b, cc});
        for (long n = 1; n <= 4; ++n)
            first_combinations(static_cast<long>(triples.size()), n, 500,
                               [&](const std::vector<int>& combo) {
                X3CInstance x;
                for (long j = 1; j <= 6; ++j)
                    x.elements.push_back("b" + std::to_string(j));
                for (int i : combo)
                    x.sets.push_back(triples[i]);
                ++files;
                c.require(parse_x3c(serialize_x3c(x)) == x, "exact-cover round-trip");
                take_control(x3c_to_ccav(x).instance);
                take_control(x3c_to_ccdv(x).instance);
                take_control(x3c_to_ccpv(x, TieRule::TE).instance);
                take_control(x3c_to_ccpv(x, TieRule::TP).instance);
            });

        for (unsigned long long seed : {1ull, 42ull}) {
            c.require(gen_election_text(seed, 5, 8) == gen_election_text(seed, 5, 8),
                      "election generator is seed-stable");
            c.require(gen_hitting_set_text(seed, 4, 5, 2) ==
                          gen_hitting_set_text(seed, 4, 5, 2),
                      "hitting-set generator is seed-stable");
            c.require(gen_x3c_text(seed, 6, 4) == gen_x3c_text(seed, 6, 4),
                      "exact-cover generator is seed-stable");
        }

        c.note(std::to_string(files) + " files round-tripped byte-faithfully, "
               "generators seed-stable");
    });

    if (failed == 0) {
        std::printf("all 10 criteria hold\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failed);
    return 1;
}
