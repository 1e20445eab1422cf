#include "bvc/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "bvc/errors.hpp"
#include "bvc/rng.hpp"

namespace bvc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

struct Line {
    long number = 0;
    std::string key, value;
};

std::vector<Line> scan(const std::string& text) {
    std::vector<Line> out;
    long num = 0;
    for (const std::string& raw : split(text, '\n')) {
        ++num;
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#')
            continue;
        std::size_t pos = t.find(':');
        if (pos == std::string::npos)
            throw parse_error(num, "expected 'key: value'");
        out.push_back({num, trim(t.substr(0, pos)), trim(t.substr(pos + 1))});
    }
    return out;
}

long parse_long(const Line& l, const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw parse_error(l.number, what + " must be a number, got '" + text + "'");
    }
    if (used != text.size())
        throw parse_error(l.number, what + " must be a number, got '" + text + "'");
    return v;
}

std::vector<std::string> name_list(const Line& l) {
    std::vector<std::string> out;
    for (const std::string& part : split(l.value, ',')) {
        std::string t = trim(part);
        if (t.empty())
            throw parse_error(l.number, "empty name in list");
        out.push_back(t);
    }
    return out;
}

struct VoteLine {
    long number = 0;
    long multiplicity = 1;
    std::vector<std::string> names;
};

VoteLine parse_vote_line(const Line& l) {
    std::size_t pos = l.value.find(':');
    if (pos == std::string::npos)
        throw parse_error(l.number, "expected '" + l.key + ": <count> : c1 > c2 > ...'");
    VoteLine v;
    v.number = l.number;
    v.multiplicity = parse_long(l, trim(l.value.substr(0, pos)), "vote multiplicity");
    if (v.multiplicity < 1)
        throw parse_error(l.number, "vote multiplicity must be at least 1");
    for (const std::string& part : split(l.value.substr(pos + 1), '>')) {
        std::string t = trim(part);
        if (t.empty())
            throw parse_error(l.number, "empty candidate in ranking");
        v.names.push_back(t);
    }
    return v;
}

void check_candidate_names(const Line& l, const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const std::string& n : names) {
        if (!valid_candidate_token(n))
            throw parse_error(l.number, "invalid candidate name '" + n + "'");
        if (!seen.insert(n).second)
            throw parse_error(l.number, "candidate '" + n + "' listed twice");
    }
}

void check_ranking(const VoteLine& v, const std::vector<CandidateId>& candidates) {
    if (v.names.size() != candidates.size())
        throw parse_error(v.number, "ranking lists " + std::to_string(v.names.size()) +
                                        " candidates, the election declares " +
                                        std::to_string(candidates.size()));
    std::set<std::string> seen;
    for (const std::string& n : v.names) {
        if (std::find(candidates.begin(), candidates.end(), n) == candidates.end())
            throw parse_error(v.number, "unknown candidate '" + n + "' in ranking");
        if (!seen.insert(n).second)
            throw parse_error(v.number, "candidate '" + n + "' ranked twice");
    }
}

std::string join(const std::vector<std::string>& names, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out += sep;
        out += names[i];
    }
    return out;
}

} // namespace

Election parse_election(const std::string& text) {
    std::vector<CandidateId> candidates;
    bool have_candidates = false;
    std::vector<VoteLine> votes;
    for (const Line& l : scan(text)) {
        if (l.key == "candidates") {
            if (have_candidates)
                throw parse_error(l.number, "duplicate 'candidates:' line");
            candidates = name_list(l);
            check_candidate_names(l, candidates);
            have_candidates = true;
        } else if (l.key == "vote") {
            votes.push_back(parse_vote_line(l));
        } else {
            throw parse_error(l.number, "unknown key '" + l.key + "' in an election file");
        }
    }
    if (!have_candidates)
        throw input_error("missing 'candidates:' line");
    std::vector<std::pair<long, std::vector<CandidateId>>> rows;
    for (const VoteLine& v : votes) {
        check_ranking(v, candidates);
        rows.emplace_back(v.multiplicity, v.names);
    }
    return Election(candidates, rows);
}

std::string serialize_election(const Election& e) {
    std::string out = "candidates: " + join(e.candidates(), ", ") + "\n";
    for (const Vote& v : e.votes())
        out += "vote: " + std::to_string(v.multiplicity) + " : " +
               join(e.indices_to_ranking(v.ranking), " > ") + "\n";
    return out;
}

ControlInstance parse_control_instance(const std::string& text) {
    std::optional<Line> control_line, budget_line, tie_line;
    std::optional<std::string> designated;
    std::vector<CandidateId> candidates, spoilers;
    bool have_candidates = false;
    std::vector<VoteLine> votes, uvotes;

    for (const Line& l : scan(text)) {
        if (l.key == "control") {
            if (control_line)
                throw parse_error(l.number, "duplicate 'control:' line");
            control_line = l;
        } else if (l.key == "designated") {
            if (designated)
                throw parse_error(l.number, "duplicate 'designated:' line");
            designated = l.value;
        } else if (l.key == "budget") {
            if (budget_line)
                throw parse_error(l.number, "duplicate 'budget:' line");
            budget_line = l;
        } else if (l.key == "tie") {
            if (tie_line)
                throw parse_error(l.number, "duplicate 'tie:' line");
            tie_line = l;
        } else if (l.key == "spoilers") {
            if (!spoilers.empty())
                throw parse_error(l.number, "duplicate 'spoilers:' line");
            spoilers = name_list(l);
        } else if (l.key == "candidates") {
            if (have_candidates)
                throw parse_error(l.number, "duplicate 'candidates:' line");
            candidates = name_list(l);
            check_candidate_names(l, candidates);
            have_candidates = true;
        } else if (l.key == "vote") {
            votes.push_back(parse_vote_line(l));
        } else if (l.key == "uvote") {
            uvotes.push_back(parse_vote_line(l));
        } else {
            throw parse_error(l.number, "unknown key '" + l.key + "' in a control file");
        }
    }
    if (!control_line)
        throw input_error("missing 'control:' line");
    if (!designated)
        throw input_error("missing 'designated:' line");
    if (!have_candidates)
        throw input_error("missing 'candidates:' line");

    ControlType code;
    bool bare = false;
    if (auto full = control_type_from_string(control_line->value)) {
        code = *full;
    } else if (auto te = control_type_from_string(control_line->value + "-TE")) {
        code = *te;
        bare = true;
    } else {
        throw parse_error(control_line->number,
                          "unknown control type '" + control_line->value + "'");
    }
    if (bare && !tie_line)
        throw input_error("control type '" + control_line->value +
                          "' needs a tie rule: use the -TE/-TP suffix or a 'tie:' line");
    if (tie_line) {
        std::string tv = tie_line->value;
        for (char& ch : tv)
            ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (tv != "TE" && tv != "TP")
            throw parse_error(tie_line->number, "tie rule must be TE or TP");
        TieRule rule = tv == "TE" ? TieRule::TE : TieRule::TP;
        if (bare) {
            code = *control_type_from_string(control_line->value +
                                             (rule == TieRule::TE ? "-TE" : "-TP"));
        } else {
            auto carried = tie_rule_of(code);
            if (!carried)
                throw input_error("'tie:' does not apply to " + to_string(code));
            if (*carried != rule)
                throw input_error("'tie: " + tv + "' conflicts with the rule carried by '" +
                                  control_line->value + "'");
        }
    }

    ControlInstance inst;
    inst.code = code;
    inst.designated = *designated;
    inst.spoilers = spoilers;

    if (budget_line) {
        if (budget_line->value == "unlimited") {
            if (!has_unlimited_budget(code))
                throw input_error("'budget: unlimited' is only legal for CCAC-U and DCAC-U");
        } else {
            long b = parse_long(*budget_line, budget_line->value, "budget");
            if (has_unlimited_budget(code))
                throw input_error(to_string(code) +
                                  " takes 'budget: unlimited', not a number");
            if (is_partition(code))
                throw input_error(to_string(code) + " takes no budget");
            inst.budget = b;
        }
    }

    std::vector<std::pair<long, std::vector<CandidateId>>> rows;
    for (const VoteLine& v : votes) {
        check_ranking(v, candidates);
        rows.emplace_back(v.multiplicity, v.names);
    }
    inst.election = Election(candidates, rows);
    for (const VoteLine& v : uvotes) {
        check_ranking(v, candidates);
        inst.unregistered.push_back(
            Vote{v.multiplicity, inst.election.ranking_to_indices(v.names)});
    }
    validate(inst);
    return inst;
}

std::string serialize_control_instance(const ControlInstance& inst) {
    std::string out = "control: " + to_string(inst.code) + "\n";
    out += "designated: " + inst.designated + "\n";
    if (inst.budget)
        out += "budget: " + std::to_string(*inst.budget) + "\n";
    else if (has_unlimited_budget(inst.code))
        out += "budget: unlimited\n";
    out += "candidates: " + join(inst.election.candidates(), ", ") + "\n";
    if (!inst.spoilers.empty())
        out += "spoilers: " + join(inst.spoilers, ", ") + "\n";
    for (const Vote& v : inst.election.votes())
        out += "vote: " + std::to_string(v.multiplicity) + " : " +
               join(inst.election.indices_to_ranking(v.ranking), " > ") + "\n";
    for (const Vote& v : inst.unregistered)
        out += "uvote: " + std::to_string(v.multiplicity) + " : " +
               join(inst.election.indices_to_ranking(v.ranking), " > ") + "\n";
    return out;
}

namespace {

struct SourceLines {
    std::vector<std::string> elements;
    std::vector<std::pair<long, std::vector<int>>> sets; // line, member indices
    std::optional<Line> budget_line;
};

SourceLines parse_source(const std::string& text) {
    SourceLines out;
    bool have_elements = false;
    std::vector<Line> set_lines;
    for (const Line& l : scan(text)) {
        if (l.key == "elements") {
            if (have_elements)
                throw parse_error(l.number, "duplicate 'elements:' line");
            out.elements = name_list(l);
            check_candidate_names(l, out.elements);
            have_elements = true;
        } else if (l.key == "set") {
            set_lines.push_back(l);
        } else if (l.key == "budget") {
            if (out.budget_line)
                throw parse_error(l.number, "duplicate 'budget:' line");
            out.budget_line = l;
        } else {
            throw parse_error(l.number, "unknown key '" + l.key + "' in a source problem file");
        }
    }
    if (!have_elements)
        throw input_error("missing 'elements:' line");
    for (const Line& l : set_lines) {
        std::vector<int> members;
        for (const std::string& n : name_list(l)) {
            auto it = std::find(out.elements.begin(), out.elements.end(), n);
            if (it == out.elements.end())
                throw parse_error(l.number, "unknown element '" + n + "'");
            members.push_back(static_cast<int>(it - out.elements.begin()));
        }
        out.sets.emplace_back(l.number, std::move(members));
    }
    return out;
}

} // namespace

HittingSetInstance parse_hitting_set(const std::string& text) {
    SourceLines src = parse_source(text);
    HittingSetInstance hs;
    hs.elements = src.elements;
    for (auto& [line, members] : src.sets)
        hs.sets.push_back(std::move(members));
    if (!src.budget_line)
        throw input_error("missing 'budget:' line");
    hs.budget = parse_long(*src.budget_line, src.budget_line->value, "budget");
    validate(hs);
    return hs;
}

std::string serialize_hitting_set(const HittingSetInstance& hs) {
    std::string out = "elements: " + join(hs.elements, ", ") + "\n";
    for (const auto& s : hs.sets) {
        std::vector<std::string> names;
        for (int e : s)
            names.push_back(hs.elements[e]);
        out += "set: " + join(names, ", ") + "\n";
    }
    out += "budget: " + std::to_string(hs.budget) + "\n";
    return out;
}

X3CInstance parse_x3c(const std::string& text) {
    SourceLines src = parse_source(text);
    if (src.budget_line)
        throw parse_error(src.budget_line->number, "exact-cover instances take no budget");
    X3CInstance x;
    x.elements = src.elements;
    for (const auto& [line, members] : src.sets) {
        if (members.size() != 3)
            throw parse_error(line, "exact-cover sets take exactly 3 elements, got " +
                                        std::to_string(members.size()));
        x.sets.push_back({members[0], members[1], members[2]});
    }
    validate(x);
    return x;
}

std::string serialize_x3c(const X3CInstance& x) {
    std::string out = "elements: " + join(x.elements, ", ") + "\n";
    for (const auto& s : x.sets)
        out += "set: " + x.elements[s[0]] + ", " + x.elements[s[1]] + ", " +
               x.elements[s[2]] + "\n";
    return out;
}

namespace {

std::vector<std::string> letter_names(long n) {
    std::vector<std::string> out;
    for (long i = 0; i < n; ++i)
        out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

} // namespace

std::string gen_election_text(unsigned long long seed, long num_candidates, long num_votes) {
    if (num_candidates < 1 || num_candidates > 26)
        throw input_error("generated elections take 1 to 26 candidates");
    if (num_votes < 0)
        throw input_error("vote count may not be negative");
    std::mt19937_64 rng(seed);
    std::vector<std::string> names = letter_names(num_candidates);
    std::string out = "candidates: " + join(names, ", ") + "\n";
    std::vector<std::string> row = names;
    for (long v = 0; v < num_votes; ++v) {
        for (long i = num_candidates - 1; i > 0; --i)
            std::swap(row[i], row[rng_range(rng, 0, i)]);
        out += "vote: 1 : " + join(row, " > ") + "\n";
    }
    return out;
}

std::string gen_hitting_set_text(unsigned long long seed, long num_elements, long num_sets,
                                 long budget) {
    if (num_elements < 1 || num_elements > 20)
        throw input_error("generated hitting-set instances take 1 to 20 elements");
    if (num_sets < 0 || budget < 0)
        throw input_error("set count and budget may not be negative");
    std::mt19937_64 rng(seed);
    std::vector<std::string> names;
    for (long j = 1; j <= num_elements; ++j)
        names.push_back("b" + std::to_string(j));
    std::string out = "elements: " + join(names, ", ") + "\n";
    for (long i = 0; i < num_sets; ++i) {
        unsigned long long mask =
            1 + rng_below(rng, (1ull << num_elements) - 1); // non-empty subset
        std::vector<std::string> members;
        for (long j = 0; j < num_elements; ++j)
            if (mask & (1ull << j))
                members.push_back(names[j]);
        out += "set: " + join(members, ", ") + "\n";
    }
    out += "budget: " + std::to_string(budget) + "\n";
    return out;
}

std::string gen_x3c_text(unsigned long long seed, long num_elements, long num_sets) {
    if (num_elements < 3 || num_elements % 3 != 0 || num_elements > 60)
        throw input_error("generated exact-cover instances take 3m elements, m between 1 "
                          "and 20");
    if (num_sets < 0)
        throw input_error("set count may not be negative");
    std::mt19937_64 rng(seed);
    std::vector<std::string> names;
    for (long j = 1; j <= num_elements; ++j)
        names.push_back("b" + std::to_string(j));
    std::string out = "elements: " + join(names, ", ") + "\n";
    std::vector<long> idx(num_elements);
    for (long j = 0; j < num_elements; ++j)
        idx[j] = j;
    for (long i = 0; i < num_sets; ++i) {
        for (long j = 0; j < 3; ++j)
            std::swap(idx[j], idx[rng_range(rng, j, num_elements - 1)]);
        std::vector<long> pick(idx.begin(), idx.begin() + 3);
        std::sort(pick.begin(), pick.end());
        out += "set: " + names[pick[0]] + ", " + names[pick[1]] + ", " + names[pick[2]] +
               "\n";
    }
    return out;
}

} // namespace bvc
