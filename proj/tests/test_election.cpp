#include "doctest.h"

#include <algorithm>

#include "bvc/election.hpp"

using namespace bvc;

namespace {

Election make(std::vector<CandidateId> cands,
              std::vector<std::pair<long, std::vector<CandidateId>>> votes) {
    return Election(std::move(cands), std::move(votes));
}

// the worked four-candidate election used across the toolkit: a wins the
// full election but loses the {a,c,d} restriction to c
Election worked_example() {
    return make({"a", "b", "c", "d"},
                {{3, {"a", "c", "b", "d"}},
                 {2, {"b", "d", "c", "a"}},
                 {1, {"d", "a", "c", "b"}}});
}

} // namespace

TEST_CASE("majority threshold is floor(n/2)+1") {
    CHECK(majority_threshold(0) == 1);
    CHECK(majority_threshold(1) == 1);
    CHECK(majority_threshold(6) == 4);
    CHECK(majority_threshold(7) == 4);
    CHECK(majority_threshold(55) == 28);
    CHECK_THROWS_AS(majority_threshold(-1), input_error);
}

TEST_CASE("candidate tokens exclude separators and whitespace") {
    CHECK(valid_candidate_token("a"));
    CHECK(valid_candidate_token("b12"));
    CHECK(valid_candidate_token("w'"));
    CHECK_FALSE(valid_candidate_token(""));
    CHECK_FALSE(valid_candidate_token("a b"));
    CHECK_FALSE(valid_candidate_token("a,b"));
    CHECK_FALSE(valid_candidate_token("a>b"));
}

TEST_CASE("election construction validates its ballots") {
    CHECK_THROWS_AS(make({"a", "a"}, {}), input_error);
    CHECK_THROWS_AS(make({"a", "b"}, {{1, {"a"}}}), input_error);          // short
    CHECK_THROWS_AS(make({"a", "b"}, {{1, {"a", "a"}}}), input_error);     // duplicate
    CHECK_THROWS_AS(make({"a", "b"}, {{1, {"a", "x"}}}), input_error);     // unknown
    CHECK_THROWS_AS(make({"a", "b"}, {{0, {"a", "b"}}}), input_error);     // weight
    CHECK_THROWS_AS(make({"a b"}, {}), input_error);                       // bad token

    Election e = worked_example();
    CHECK(e.num_candidates() == 4);
    CHECK(e.total_votes() == 6);
    CHECK(e.votes().size() == 3);
    CHECK(e.candidate_index("c") == 2);
    CHECK(e.has_candidate("d"));
    CHECK_FALSE(e.has_candidate("e"));
    CHECK_THROWS_AS(e.candidate_index("e"), input_error);
}

TEST_CASE("level scores count top-i appearances with multiplicity") {
    Election e = worked_example();
    CHECK(level_score(e, "a", 1) == 3);
    CHECK(level_score(e, "a", 2) == 4);
    CHECK(level_score(e, "b", 2) == 2);
    CHECK(level_score(e, "c", 2) == 3);
    CHECK(level_score(e, "d", 2) == 3);
    CHECK(level_score(e, "a", 4) == 6);
    CHECK_THROWS_AS(level_score(e, "a", 0), input_error);
    CHECK_THROWS_AS(level_score(e, "a", 5), input_error);

    SUBCASE("per-level column sums equal level times the vote count") {
        for (int level = 1; level <= 4; ++level) {
            long sum = 0;
            for (const CandidateId& c : e.candidates())
                sum += level_score(e, c, level);
            CHECK(sum == level * e.total_votes());
        }
    }
}

TEST_CASE("worked example: a wins the full election at level 2") {
    BucklinOutcome oc = bucklin_outcome(worked_example());
    REQUIRE(oc.winning_level.has_value());
    CHECK(*oc.winning_level == 2);
    CHECK(oc.winners == std::vector<CandidateId>{"a"});
    CHECK(oc.score(0, 2) == 4); // only a reaches the threshold of 4
    CHECK(oc.score(2, 2) == 3);
}

TEST_CASE("worked example: dropping a non-winner flips the unique winner") {
    // the unique winner of the full election does not survive the
    // restriction that keeps it: Bucklin fails this inheritance property
    Election r = restrict_to(worked_example(), {"a", "c", "d"});
    CHECK(r.num_candidates() == 3);
    CHECK(r.total_votes() == 6);
    BucklinOutcome oc = bucklin_outcome(r);
    REQUIRE(oc.winning_level.has_value());
    CHECK(*oc.winning_level == 2);
    CHECK(oc.winners == std::vector<CandidateId>{"c"});
    CHECK(level_score(r, "c", 2) == 5);
    CHECK(level_score(r, "a", 2) == 4);
}

TEST_CASE("restriction keeps ballot order and declaration order") {
    Election e = make({"a", "b", "c", "d"}, {{1, {"a", "c", "b", "d"}}});
    Election r = restrict_to(e, {"c", "b"}); // request order is irrelevant
    CHECK(r.candidates() == std::vector<CandidateId>{"b", "c"});
    CHECK(r.votes()[0].ranking == std::vector<int>{1, 0}); // c before b

    CHECK_THROWS_AS(restrict_to(e, {}), input_error);
    CHECK_THROWS_AS(restrict_to(e, {"a", "a"}), input_error);
    CHECK_THROWS_AS(restrict_to(e, {"z"}), input_error);
}

TEST_CASE("zero votes elect nobody, one vote elects its favourite") {
    Election empty = make({"a", "b"}, {});
    BucklinOutcome oc = bucklin_outcome(empty);
    CHECK_FALSE(oc.winning_level.has_value());
    CHECK(oc.winners.empty());

    Election one = make({"a", "b"}, {{1, {"b", "a"}}});
    oc = bucklin_outcome(one);
    REQUIRE(oc.winning_level.has_value());
    CHECK(*oc.winning_level == 1);
    CHECK(oc.winners == std::vector<CandidateId>{"b"});

    Election solo = make({"a"}, {{5, {"a"}}});
    oc = bucklin_outcome(solo);
    CHECK(oc.winners == std::vector<CandidateId>{"a"});
}

TEST_CASE("a level-1 majority favourite always wins alone") {
    Election e = make({"x", "y", "z"},
                      {{3, {"y", "x", "z"}}, {1, {"x", "y", "z"}}, {1, {"z", "y", "x"}}});
    BucklinOutcome oc = bucklin_outcome(e);
    REQUIRE(oc.winning_level.has_value());
    CHECK(*oc.winning_level == 1);
    CHECK(oc.winners == std::vector<CandidateId>{"y"});
}

TEST_CASE("tied top scores at the winning level are reported together") {
    Election e = make({"a", "b"}, {{1, {"a", "b"}}, {1, {"b", "a"}}});
    BucklinOutcome oc = bucklin_outcome(e);
    REQUIRE(oc.winning_level.has_value());
    CHECK(*oc.winning_level == 2);
    CHECK(oc.winners == std::vector<CandidateId>{"a", "b"});
}

TEST_CASE("winners at the decisive level need the top score, not just a majority") {
    // both c and w pass the threshold at level 2, but only w has the maximum
    Election e = make({"c", "w", "x"},
                      {{2, {"w", "c", "x"}}, {1, {"c", "w", "x"}}, {1, {"x", "w", "c"}}});
    BucklinOutcome oc = bucklin_outcome(e);
    REQUIRE(oc.winning_level.has_value());
    CHECK(*oc.winning_level == 2);
    CHECK(level_score(e, "c", 2) == 3);
    CHECK(level_score(e, "w", 2) == 4);
    CHECK(oc.winners == std::vector<CandidateId>{"w"});
}

TEST_CASE("ranking name/index conversions validate membership") {
    Election e = worked_example();
    std::vector<int> idx = e.ranking_to_indices({"d", "a", "c", "b"});
    CHECK(idx == std::vector<int>{3, 0, 2, 1});
    CHECK(e.indices_to_ranking(idx) == std::vector<CandidateId>{"d", "a", "c", "b"});
    CHECK_THROWS_AS(e.ranking_to_indices({"d", "a", "c"}), input_error);
    CHECK_THROWS_AS(e.ranking_to_indices({"d", "a", "c", "c"}), input_error);
}

TEST_CASE("subelection evaluator matches the standalone evaluation") {
    Election e = worked_example();
    SubelectionEvaluator ev(e);

    SUBCASE("full scope, all candidates kept") {
        std::vector<int> out;
        int level = ev.winners_full({1, 1, 1, 1}, out);
        CHECK(level == 2);
        CHECK(e.indices_to_ranking(out) == std::vector<CandidateId>{"a"});
    }

    SUBCASE("candidate masks agree with restrict_to on every subset") {
        std::vector<int> out;
        for (int mask = 1; mask < 16; ++mask) {
            std::vector<char> keep(4, 0);
            std::vector<CandidateId> kept;
            for (int c = 0; c < 4; ++c)
                if (mask & (1 << c)) {
                    keep[c] = 1;
                    kept.push_back(e.candidates()[c]);
                }
            int level = ev.winners_full(keep, out);
            BucklinOutcome oc = bucklin_outcome(restrict_to(e, kept));
            REQUIRE(oc.winning_level.has_value());
            CHECK(level == *oc.winning_level);
            CHECK(e.indices_to_ranking(out) == oc.winners);
        }
    }

    SUBCASE("empty ballot scope yields no winner") {
        std::vector<int> out;
        int level = ev.winners({1, 1, 1, 1}, {}, out);
        CHECK(level == 0);
        CHECK(out.empty());
    }

    SUBCASE("weighted scopes split multiplicities") {
        // one of the three a>c>b>d ballots, plus the d>a>c>b ballot
        std::vector<int> out;
        int level = ev.winners({1, 1, 1, 1}, {{0, 1}, {2, 1}}, out);
        CHECK(level == 2);
        CHECK(e.indices_to_ranking(out) == std::vector<CandidateId>{"a"});
    }

    SUBCASE("extra ballots are addressable beyond the base votes") {
        int extra = ev.add_extra_ballot(e.ranking_to_indices({"b", "c", "d", "a"}));
        CHECK(extra == ev.num_votes());
        std::vector<int> out;
        int level = ev.winners({1, 1, 1, 1}, {{extra, 3}}, out);
        CHECK(level == 1);
        CHECK(e.indices_to_ranking(out) == std::vector<CandidateId>{"b"});
    }
}

TEST_CASE("elections compare by structure, not by flattening") {
    Election a = make({"a", "b"}, {{2, {"a", "b"}}});
    Election b = make({"a", "b"}, {{2, {"a", "b"}}});
    Election split = make({"a", "b"}, {{1, {"a", "b"}}, {1, {"a", "b"}}});
    CHECK(a == b);
    CHECK(a != split); // same totals, different ballot entries
    CHECK(bucklin_outcome(a).winners == bucklin_outcome(split).winners);
}
