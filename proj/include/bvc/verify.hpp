#pragma once

#include <set>
#include <string>
#include <vector>

#include "bvc/fixtures.hpp"
#include "bvc/reductions.hpp"

namespace bvc {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

// Recomputes every expectation stored in the fixture.
std::vector<CheckResult> check_fixture(const Fixture& f);

// Measures the level-2 scores of c, d, w in the {c,d,w}-restriction of the
// generated candidate-control election and compares them with the closed
// forms, including the two strict winning margins of c.
std::vector<CheckResult> check_lemma6_formulas(long n, long m, long k);

// Aggregate result of one equivalence or property sweep. A failure string
// names the offending instance; an empty list means the sweep agreed
// everywhere.
struct SweepStats {
    long instances = 0;
    long yes_instances = 0;
    long witnesses_checked = 0;
    std::vector<std::string> failures;
    void merge(const SweepStats& o);
};

// Candidate-control equivalence: every generated instance across the 13
// supported codes must match the hitting-set oracle. Cells with more than
// per_cell source instances are sampled with the given seed.
SweepStats sweep_construction1(long max_m, long max_n, long per_cell,
                               unsigned long long seed);

// Deleting-candidates equivalence, exhaustive over hitting-set instances with
// m <= max_m elements, n <= max_n sets and budgets up to max_k. Also checks
// that each uncontrolled election has at least two winners at level n+k+1.
SweepStats sweep_ccdc(long max_m, long max_n, long max_k);

// Exact-cover equivalence sweeps over three-element universes of size 6
// (m = 2) with up to max_sets distinct triples, sampled down to cap
// collections per set count.
SweepStats sweep_ccav(long max_sets, long cap, unsigned long long seed);
SweepStats sweep_ccdv(long max_sets, long cap, unsigned long long seed);
SweepStats sweep_ccpv(TieRule rule, long max_sets, long cap, unsigned long long seed);

// Polynomial decider vs. brute force on the two vulnerable problems.
SweepStats sweep_poly_exhaustive_dcav();
SweepStats sweep_poly_exhaustive_dcdv();
SweepStats sweep_poly_random(long count, unsigned long long seed);

// Hitting-set repair: decision preserved and restricted shape reached,
// exhaustive over small sources.
SweepStats sweep_hs_to_rhs(long max_m, long max_n);

// Six scoring/winner-set properties over seeded random elections.
SweepStats sweep_properties(long num_elections, unsigned long long seed);

struct VerifyConfig {
    std::set<std::string> suites; // subset of {fixtures, formulas, reductions,
                                  // poly, properties}; empty or "all" runs everything
    long max_n = 4;               // size ceiling for sweeps; 0 runs nothing
    unsigned long long seed = 1;
    long instance_cap = 200;      // per-cell sampling cap
    std::string corrupt_fixture;  // self-test hook: breaks one expectation
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    long passed = 0;
    long failed = 0;
    bool all_passed() const { return failed == 0; }
};

VerifyReport run_verification_suite(const VerifyConfig& config);

// One line per check: "PASS|FAIL <check-id> <detail>".
std::string to_text(const VerifyReport& report);

} // namespace bvc
