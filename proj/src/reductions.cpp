#include "bvc/reductions.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace bvc {

bool operator==(const HittingSetInstance& a, const HittingSetInstance& b) {
    return a.elements == b.elements && a.sets == b.sets && a.budget == b.budget;
}

void validate(const HittingSetInstance& hs) {
    std::set<std::string> seen;
    for (const std::string& e : hs.elements) {
        if (!valid_candidate_token(e))
            throw input_error("invalid element name '" + e + "'");
        if (!seen.insert(e).second)
            throw input_error("duplicate element '" + e + "'");
    }
    long m = static_cast<long>(hs.elements.size());
    for (std::size_t i = 0; i < hs.sets.size(); ++i) {
        const auto& s = hs.sets[i];
        if (s.empty())
            throw input_error("set " + std::to_string(i + 1) + " is empty");
        std::set<int> members;
        for (int e : s) {
            if (e < 0 || e >= m)
                throw input_error("set " + std::to_string(i + 1) +
                                  " references an unknown element");
            if (!members.insert(e).second)
                throw input_error("set " + std::to_string(i + 1) + " repeats an element");
        }
    }
    if (hs.budget < 0)
        throw input_error("budget may not be negative");
}

RestrictedHittingSetInstance as_restricted(HittingSetInstance hs) {
    validate(hs);
    long n = static_cast<long>(hs.sets.size());
    long m = static_cast<long>(hs.elements.size());
    if (!(n > m))
        throw input_error("restricted instance needs more sets than elements (n > m)");
    if (!(hs.budget >= 1 && hs.budget < m))
        throw input_error("restricted instance needs 1 <= budget < number of elements");
    return RestrictedHittingSetInstance{std::move(hs)};
}

bool operator==(const X3CInstance& a, const X3CInstance& b) {
    return a.elements == b.elements && a.sets == b.sets;
}

void validate(const X3CInstance& x) {
    std::set<std::string> seen;
    for (const std::string& e : x.elements) {
        if (!valid_candidate_token(e))
            throw input_error("invalid element name '" + e + "'");
        if (!seen.insert(e).second)
            throw input_error("duplicate element '" + e + "'");
    }
    if (x.elements.empty() || x.elements.size() % 3 != 0)
        throw input_error("the universe must hold 3m elements for some m >= 1");
    long sz = static_cast<long>(x.elements.size());
    for (std::size_t i = 0; i < x.sets.size(); ++i) {
        const auto& s = x.sets[i];
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw input_error("set " + std::to_string(i + 1) + " repeats an element");
        for (int e : s)
            if (e < 0 || e >= sz)
                throw input_error("set " + std::to_string(i + 1) +
                                  " references an unknown element");
    }
}

std::optional<std::vector<int>> solve_hitting_set(const HittingSetInstance& hs,
                                                  std::size_t element_cap) {
    validate(hs);
    std::size_t m = hs.elements.size();
    if (m > element_cap)
        throw resource_limit_error("hitting-set oracle capped at " +
                                   std::to_string(element_cap) + " elements, got " +
                                   std::to_string(m));
    std::vector<unsigned long long> masks;
    masks.reserve(hs.sets.size());
    for (const auto& s : hs.sets) {
        unsigned long long mask = 0;
        for (int e : s)
            mask |= 1ull << e;
        masks.push_back(mask);
    }
    long max_size = std::min<long>(hs.budget, static_cast<long>(m));
    std::vector<int> pick;
    for (long size = 0; size <= max_size; ++size) {
        // lexicographically ordered combinations of the given size
        pick.resize(size);
        for (long i = 0; i < size; ++i)
            pick[i] = static_cast<int>(i);
        while (true) {
            unsigned long long mask = 0;
            for (int e : pick)
                mask |= 1ull << e;
            bool hits = true;
            for (unsigned long long sm : masks)
                if ((sm & mask) == 0) {
                    hits = false;
                    break;
                }
            if (hits)
                return pick;
            long i = size - 1;
            while (i >= 0 && pick[i] == static_cast<int>(m) - (size - i))
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (long j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> solve_x3c(const X3CInstance& x, std::size_t set_cap) {
    validate(x);
    std::size_t n = x.sets.size();
    if (n > set_cap)
        throw resource_limit_error("exact-cover oracle capped at " + std::to_string(set_cap) +
                                   " sets, got " + std::to_string(n));
    std::size_t m = x.elements.size() / 3;
    if (m > n)
        return std::nullopt; // a cover takes exactly m distinct sets
    std::vector<unsigned long long> masks;
    for (const auto& s : x.sets)
        masks.push_back((1ull << s[0]) | (1ull << s[1]) | (1ull << s[2]));
    unsigned long long full = x.elements.size() == 64
                                  ? ~0ull
                                  : (1ull << x.elements.size()) - 1;
    std::vector<int> chosen;
    // depth-first over set indices in increasing order gives the
    // lexicographically first cover
    auto rec = [&](auto&& self, std::size_t start, unsigned long long covered) -> bool {
        if (covered == full)
            return true;
        for (std::size_t i = start; i < n; ++i) {
            if (masks[i] & covered)
                continue;
            chosen.push_back(static_cast<int>(i));
            if (self(self, i + 1, covered | masks[i]))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (rec(rec, 0, 0))
        return chosen;
    return std::nullopt;
}

namespace {

// Claims candidate names, deterministically dodging collisions with
// source-element names ("w" -> "w_2", ...).
struct NameClaimer {
    std::set<std::string> used;
    std::string claim(const std::string& want) {
        if (used.insert(want).second)
            return want;
        for (int i = 2;; ++i) {
            std::string alt = want + "_" + std::to_string(i);
            if (used.insert(alt).second)
                return alt;
        }
    }
};

std::vector<int> add_pool(std::vector<CandidateId>& names, NameClaimer& nc,
                          const std::string& prefix, long count) {
    std::vector<int> idx;
    idx.reserve(count);
    for (long i = 1; i <= count; ++i) {
        idx.push_back(static_cast<int>(names.size()));
        names.push_back(nc.claim(prefix + std::to_string(i)));
    }
    return idx;
}

std::vector<int> minus(const std::vector<int>& pool, const std::vector<int>& subset) {
    // both ascending
    std::vector<int> out;
    std::set_difference(pool.begin(), pool.end(), subset.begin(), subset.end(),
                        std::back_inserter(out));
    return out;
}

std::vector<int> slice(const std::vector<int>& pool, long first, long count) {
    return std::vector<int>(pool.begin() + first, pool.begin() + first + count);
}

struct Row {
    std::vector<int> r;
    Row& add(int c) {
        r.push_back(c);
        return *this;
    }
    Row& add(const std::vector<int>& part) {
        r.insert(r.end(), part.begin(), part.end());
        return *this;
    }
};

struct LayoutBuilder {
    ReductionLayout layout;
    std::vector<Vote> votes;
    long flat = 0;

    void add_vote(int group, int param, long mult, Row row) {
        layout.groups.push_back(
            {group, param, static_cast<int>(votes.size()), flat, mult});
        flat += mult;
        votes.push_back(Vote{mult, std::move(row.r)});
    }

    void name_pool(const std::string& key, const std::vector<CandidateId>& names,
                   const std::vector<int>& idx) {
        std::vector<CandidateId> pool_names;
        pool_names.reserve(idx.size());
        for (int i : idx)
            pool_names.push_back(names[i]);
        layout.pools.emplace_back(key, std::move(pool_names));
    }
};

std::vector<int> sorted_set(const std::vector<int>& s) {
    std::vector<int> out = s;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> sorted_set(const std::array<int, 3>& s) {
    std::vector<int> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const std::vector<CandidateId>& ReductionLayout::pool(const std::string& name) const {
    for (const auto& [key, members] : pools)
        if (key == name)
            return members;
    throw input_error("layout has no candidate pool named '" + name + "'");
}

long ReductionLayout::flat_index(int group, int param) const {
    for (const VoteGroup& g : groups)
        if (g.group == group && g.param == param) {
            if (g.weight != 1)
                throw input_error("vote group is not a single ballot");
            return g.flat_first;
        }
    throw input_error("no vote for group " + std::to_string(group) + ", index " +
                      std::to_string(param));
}

HsToRhsResult hs_to_rhs(const HittingSetInstance& hs) {
    validate(hs);
    long n = static_cast<long>(hs.sets.size());
    long m = static_cast<long>(hs.elements.size());
    if (hs.budget < 1 || hs.budget > m)
        throw input_error("conversion requires 1 <= budget <= number of elements");

    if (hs.budget == m) {
        // Always YES (the whole universe hits everything), but both repair
        // branches would emit budget = universe size, which the restricted
        // shape forbids. Emit a canonical YES instance instead.
        HittingSetInstance canon;
        canon.elements = {"y1", "y2"};
        canon.sets = {{0}, {0}, {0}};
        canon.budget = 1;
        return {as_restricted(std::move(canon)), true};
    }
    if (n > m)
        return {as_restricted(hs), false};

    HittingSetInstance out = hs;
    NameClaimer nc;
    for (const std::string& e : hs.elements)
        nc.used.insert(e);
    out.elements.push_back(nc.claim("a"));
    int a_idx = static_cast<int>(m);
    for (long i = n; i < m + 2; ++i)
        out.sets.push_back({a_idx});
    out.budget = hs.budget + 1;
    return {as_restricted(std::move(out)), false};
}

Construction1 build_construction1(const RestrictedHittingSetInstance& rhs) {
    const HittingSetInstance& hs = rhs.hs;
    as_restricted(hs); // revalidate; the struct may have been aggregate-built

    Construction1 out;
    out.source = rhs;
    out.n = static_cast<long>(hs.sets.size());
    out.m = static_cast<long>(hs.elements.size());
    out.k = hs.budget;
    const long n = out.n, m = out.m, k = out.k;

    NameClaimer nc;
    std::vector<CandidateId> names = hs.elements;
    for (const std::string& e : hs.elements)
        nc.used.insert(e);
    std::vector<int> B(m);
    for (long j = 0; j < m; ++j)
        B[j] = static_cast<int>(j);
    int c = static_cast<int>(names.size());
    names.push_back(nc.claim("c"));
    int d = static_cast<int>(names.size());
    names.push_back(nc.claim("d"));
    int w = static_cast<int>(names.size());
    names.push_back(nc.claim("w"));

    LayoutBuilder lb;
    lb.add_vote(1, -1, 2 * m + 1, Row{}.add(c).add(d).add(B).add(w));
    lb.add_vote(2, -1, 2 * n + 2 * k * (n - 1) + 3, Row{}.add(c).add(w).add(d).add(B));
    lb.add_vote(3, -1, 2 * n * (k + 1) + 5, Row{}.add(w).add(c).add(d).add(B));
    for (long i = 0; i < n; ++i) {
        std::vector<int> Si = sorted_set(hs.sets[i]);
        lb.add_vote(4, static_cast<int>(i), 2 * (k + 1),
                    Row{}.add(d).add(Si).add(c).add(w).add(minus(B, Si)));
    }
    for (long j = 0; j < m; ++j) {
        std::vector<int> bj{static_cast<int>(j)};
        lb.add_vote(5, static_cast<int>(j), 2,
                    Row{}.add(d).add(bj).add(w).add(c).add(minus(B, bj)));
    }
    lb.add_vote(6, -1, 2 * (k + 1), Row{}.add(d).add(w).add(c).add(B));

    if (lb.flat != 6 * n * (k + 1) + 4 * m + 11)
        throw std::logic_error("internal error: candidate-control vote total is off");

    lb.name_pool("B", names, B);
    lb.name_pool("c", names, {c});
    lb.name_pool("d", names, {d});
    lb.name_pool("w", names, {w});
    out.layout = std::move(lb.layout);
    out.election = Election(std::move(names), std::move(lb.votes));
    return out;
}

bool construction1_supports(ControlType code) {
    switch (code) {
    case ControlType::CCAC_U: case ControlType::CCAC_L:
    case ControlType::DCAC_U: case ControlType::DCAC_L:
    case ControlType::DCDC:
    case ControlType::CCPC_TE: case ControlType::CCPC_TP:
    case ControlType::DCPC_TE: case ControlType::DCPC_TP:
    case ControlType::CCRPC_TE: case ControlType::CCRPC_TP:
    case ControlType::DCRPC_TE: case ControlType::DCRPC_TP:
        return true;
    default:
        return false;
    }
}

ControlInstance wrap_construction1(const Construction1& built, ControlType code) {
    if (!construction1_supports(code))
        throw input_error(
            "the candidate-control family covers CCAC-U/L, DCAC-U/L, DCDC and the eight "
            "partition codes; got " + to_string(code));
    ControlInstance inst;
    inst.code = code;
    inst.election = built.election;
    inst.designated = is_constructive(code) ? built.layout.pool("w")[0]
                                            : built.layout.pool("c")[0];
    if (adds_candidates(code)) {
        inst.spoilers = built.layout.pool("B");
        if (!has_unlimited_budget(code))
            inst.budget = built.k;
    } else if (code == ControlType::DCDC) {
        inst.budget = built.m - built.k;
    }
    validate(inst);
    return inst;
}

ControlInstance wrap_construction1(const RestrictedHittingSetInstance& rhs, ControlType code) {
    return wrap_construction1(build_construction1(rhs), code);
}

CcdcReduction hs_to_ccdc(const HittingSetInstance& hs) {
    validate(hs);
    const long n = static_cast<long>(hs.sets.size());
    const long m = static_cast<long>(hs.elements.size());
    const long k = hs.budget;
    if (k < 1 || k > m)
        throw input_error("deleting-candidates generation requires 1 <= budget <= elements");
    if (n < 2)
        throw input_error("deleting-candidates generation needs at least two sets; with a "
                          "single set the designated candidate cannot collect a majority "
                          "before the padded rivals do");
    long s = 0;
    std::vector<long> si(n);
    for (long i = 0; i < n; ++i) {
        si[i] = n + k - static_cast<long>(hs.sets[i].size());
        if (si[i] < 0)
            throw input_error("set " + std::to_string(i + 1) + " holds more than n + budget "
                              "elements; the ballot padding would be negative");
        s += si[i];
    }

    NameClaimer nc;
    std::vector<CandidateId> names = hs.elements;
    for (const std::string& e : hs.elements)
        nc.used.insert(e);
    std::vector<int> B(m);
    for (long j = 0; j < m; ++j)
        B[j] = static_cast<int>(j);
    std::vector<int> C1 = add_pool(names, nc, "c", k + 1);
    std::vector<int> D = add_pool(names, nc, "d", s);
    std::vector<int> E = add_pool(names, nc, "e", n);
    std::vector<int> F = add_pool(names, nc, "f", n + k);
    int w = static_cast<int>(names.size());
    names.push_back(nc.claim("w"));

    LayoutBuilder lb;
    long d_used = 0;
    for (long i = 0; i < n; ++i) {
        std::vector<int> Si = sorted_set(hs.sets[i]);
        std::vector<int> Di = slice(D, d_used, si[i]);
        d_used += si[i];
        lb.add_vote(1, static_cast<int>(i), 1,
                    Row{}.add(Si).add(Di).add(w).add(C1).add(E).add(minus(D, Di))
                        .add(minus(B, Si)).add(F));
    }
    for (long j = 0; j <= k; ++j) {
        std::vector<int> cj{C1[j]};
        lb.add_vote(2, static_cast<int>(j), 1,
                    Row{}.add(E).add(minus(C1, cj)).add(C1[j]).add(B).add(D).add(w).add(F));
    }
    lb.add_vote(3, -1, k + 1, Row{}.add(w).add(F).add(C1).add(E).add(B).add(D));
    lb.add_vote(4, -1, n, Row{}.add(C1).add(D).add(F).add(B).add(w).add(E));
    lb.add_vote(5, -1, 1, Row{}.add(C1).add(w).add(D).add(F).add(E).add(B));

    if (lb.flat != 2 * (n + k + 1) + 1)
        throw std::logic_error("internal error: deleting-candidates vote total is off");

    lb.name_pool("B", names, B);
    lb.name_pool("C'", names, C1);
    lb.name_pool("D", names, D);
    lb.name_pool("E", names, E);
    lb.name_pool("F", names, F);
    lb.name_pool("w", names, {w});

    CcdcReduction red;
    red.source = hs;
    red.instance.code = ControlType::CCDC;
    red.instance.designated = names[w];
    red.instance.budget = k;
    red.layout = std::move(lb.layout);
    red.instance.election = Election(std::move(names), std::move(lb.votes));
    validate(red.instance);
    return red;
}

namespace {

struct X3cShape {
    long m = 0, n = 0;
    std::vector<long> lj;              // per element: sets containing it
    std::vector<std::vector<int>> Bi;  // per set index i (ascending element indices)
};

X3cShape x3c_shape(const X3CInstance& x) {
    X3cShape sh;
    sh.m = static_cast<long>(x.elements.size()) / 3;
    sh.n = static_cast<long>(x.sets.size());
    sh.lj.assign(x.elements.size(), 0);
    for (const auto& s : x.sets)
        for (int e : s)
            ++sh.lj[e];
    sh.Bi.resize(sh.n);
    for (long i = 0; i < sh.n; ++i)
        for (long j = 0; j < static_cast<long>(x.elements.size()); ++j)
            if (i + 1 <= sh.n - sh.lj[j])
                sh.Bi[i].push_back(static_cast<int>(j));
    return sh;
}

void require_small_universe(const X3CInstance& x, const char* what) {
    if (x.elements.size() / 3 < 2)
        throw input_error(std::string(what) + " generation requires m >= 2 "
                          "(a 3-element universe makes the problem trivial)");
}

// checks that `cover` is an exact cover of the source
void check_exact_cover(const X3CInstance& x, const std::vector<int>& cover) {
    std::vector<int> hit(x.elements.size(), 0);
    std::set<int> seen;
    for (int i : cover) {
        if (i < 0 || i >= static_cast<int>(x.sets.size()))
            throw input_error("cover references an unknown set");
        if (!seen.insert(i).second)
            throw input_error("cover lists a set twice");
        for (int e : x.sets[i])
            ++hit[e];
    }
    for (std::size_t e = 0; e < hit.size(); ++e)
        if (hit[e] != 1)
            throw input_error("not an exact cover: element '" + x.elements[e] +
                              "' is covered " + std::to_string(hit[e]) + " times");
}

void check_hitting_set(const HittingSetInstance& hs, const std::vector<int>& witness,
                       long budget) {
    std::set<int> chosen;
    for (int e : witness) {
        if (e < 0 || e >= static_cast<int>(hs.elements.size()))
            throw input_error("hitting set references an unknown element");
        if (!chosen.insert(e).second)
            throw input_error("hitting set lists an element twice");
    }
    if (static_cast<long>(chosen.size()) > budget)
        throw input_error("hitting set exceeds the budget");
    for (std::size_t i = 0; i < hs.sets.size(); ++i) {
        bool hit = false;
        for (int e : hs.sets[i])
            if (chosen.count(e)) {
                hit = true;
                break;
            }
        if (!hit)
            throw input_error("set " + std::to_string(i + 1) + " is not hit");
    }
}

} // namespace

CcavReduction x3c_to_ccav(const X3CInstance& x) {
    validate(x);
    require_small_universe(x, "adding-voters");
    X3cShape sh = x3c_shape(x);
    const long m = sh.m, n = sh.n;

    NameClaimer nc;
    std::vector<CandidateId> names = x.elements;
    for (const std::string& e : x.elements)
        nc.used.insert(e);
    std::vector<int> B(3 * m);
    for (long j = 0; j < 3 * m; ++j)
        B[j] = static_cast<int>(j);
    std::vector<int> D = add_pool(names, nc, "d", n * (3 * m - 4));
    int w = static_cast<int>(names.size());
    names.push_back(nc.claim("w"));

    LayoutBuilder lb;
    if (m > 2)
        lb.add_vote(1, -1, m - 2, Row{}.add(B).add(D).add(w));
    Election election(names, std::move(lb.votes));

    // the unregistered pool, recorded as group 2
    std::vector<Vote> pool;
    long pool_flat = 0;
    for (long i = 0; i < n; ++i) {
        std::vector<int> Si = sorted_set(x.sets[i]);
        std::vector<int> Di = slice(D, i * (3 * m - 4), 3 * m - 4);
        Row row = Row{}.add(Di).add(Si).add(w).add(minus(D, Di)).add(minus(B, Si));
        lb.layout.groups.push_back({2, static_cast<int>(i), static_cast<int>(pool.size()),
                                    pool_flat, 1});
        ++pool_flat;
        pool.push_back(Vote{1, std::move(row.r)});
    }

    lb.name_pool("B", names, B);
    lb.name_pool("D", names, D);
    lb.name_pool("w", names, {w});

    CcavReduction red;
    red.source = x;
    red.instance.code = ControlType::CCAV;
    red.instance.designated = names[w];
    red.instance.budget = m;
    red.instance.election = std::move(election);
    red.instance.unregistered = std::move(pool);
    red.layout = std::move(lb.layout);
    validate(red.instance);
    return red;
}

CcdvReduction x3c_to_ccdv(const X3CInstance& x) {
    validate(x);
    require_small_universe(x, "deleting-voters");
    X3cShape sh = x3c_shape(x);
    const long m = sh.m, n = sh.n;

    NameClaimer nc;
    std::vector<CandidateId> names = x.elements;
    for (const std::string& e : x.elements)
        nc.used.insert(e);
    std::vector<int> B(3 * m);
    for (long j = 0; j < 3 * m; ++j)
        B[j] = static_cast<int>(j);
    std::vector<int> D = add_pool(names, nc, "d", 3 * n * m);
    std::vector<int> F = add_pool(names, nc, "f", 3 * n * (m - 1));
    std::vector<int> G = add_pool(names, nc, "g", 3 * m * (m - 1));
    int c = static_cast<int>(names.size());
    names.push_back(nc.claim("c"));
    int w = static_cast<int>(names.size());
    names.push_back(nc.claim("w"));

    LayoutBuilder lb;
    for (long i = 0; i < n; ++i) {
        std::vector<int> Si = sorted_set(x.sets[i]);
        std::vector<int> Fi = slice(F, i * (3 * m - 3), 3 * m - 3);
        lb.add_vote(1, static_cast<int>(i), 1,
                    Row{}.add(Si).add(c).add(Fi).add(D).add(minus(B, Si)).add(G)
                        .add(minus(F, Fi)).add(w));
    }
    for (long i = 0; i < n; ++i) {
        const std::vector<int>& Bi = sh.Bi[i];
        std::vector<int> Di = slice(D, i * 3 * m, 3 * m - static_cast<long>(Bi.size()));
        lb.add_vote(2, static_cast<int>(i), 1,
                    Row{}.add(Bi).add(Di).add(w).add(F).add(minus(D, Di)).add(minus(B, Bi))
                        .add(G).add(c));
    }
    for (long kk = 0; kk < m - 1; ++kk) {
        std::vector<int> Gk = slice(G, kk * 3 * m, 3 * m);
        lb.add_vote(3, static_cast<int>(kk), 1,
                    Row{}.add(c).add(Gk).add(F).add(D).add(minus(G, Gk)).add(B).add(w));
    }

    if (lb.flat != 2 * n + m - 1)
        throw std::logic_error("internal error: deleting-voters vote total is off");

    lb.name_pool("B", names, B);
    lb.name_pool("D", names, D);
    lb.name_pool("F", names, F);
    lb.name_pool("G", names, G);
    lb.name_pool("c", names, {c});
    lb.name_pool("w", names, {w});

    CcdvReduction red;
    red.source = x;
    red.instance.code = ControlType::CCDV;
    red.instance.designated = names[w];
    red.instance.budget = m;
    red.layout = std::move(lb.layout);
    red.instance.election = Election(std::move(names), std::move(lb.votes));
    validate(red.instance);
    return red;
}

CcpvReduction x3c_to_ccpv(const X3CInstance& x, TieRule rule) {
    validate(x);
    require_small_universe(x, "voter-partition");
    X3cShape sh = x3c_shape(x);
    const long m = sh.m, n = sh.n;

    NameClaimer nc;
    std::vector<CandidateId> names = x.elements;
    for (const std::string& e : x.elements)
        nc.used.insert(e);
    std::vector<int> B(3 * m);
    for (long j = 0; j < 3 * m; ++j)
        B[j] = static_cast<int>(j);
    std::vector<int> D = add_pool(names, nc, "d", 3 * n * m);
    std::vector<int> E = add_pool(names, nc, "e", (3 * m - 1) * (m + 1));
    std::vector<int> F = add_pool(names, nc, "f", (3 * m + 1) * (m - 1));
    std::vector<int> G = add_pool(names, nc, "g", n * (3 * m - 3));
    int c = static_cast<int>(names.size());
    names.push_back(nc.claim("c"));
    int w = static_cast<int>(names.size());
    names.push_back(nc.claim("w"));
    int xx = static_cast<int>(names.size());
    names.push_back(nc.claim("x"));

    LayoutBuilder lb;
    for (long i = 0; i < n; ++i) {
        std::vector<int> Si = sorted_set(x.sets[i]);
        std::vector<int> Gi = slice(G, i * (3 * m - 3), 3 * m - 3);
        lb.add_vote(1, static_cast<int>(i), 1,
                    Row{}.add(c).add(Si).add(Gi).add(minus(G, Gi)).add(F).add(D).add(E)
                        .add(minus(B, Si)).add(w).add(xx));
    }
    for (long i = 0; i < n; ++i) {
        const std::vector<int>& Bi = sh.Bi[i];
        std::vector<int> Di = slice(D, i * 3 * m, 3 * m - static_cast<long>(Bi.size()));
        lb.add_vote(2, static_cast<int>(i), 1,
                    Row{}.add(Bi).add(Di).add(w).add(G).add(E).add(minus(D, Di)).add(F)
                        .add(minus(B, Bi)).add(c).add(xx));
    }
    for (long kk = 0; kk <= m; ++kk) {
        std::vector<int> Ek = slice(E, kk * (3 * m - 1), 3 * m - 1);
        lb.add_vote(3, static_cast<int>(kk), 1,
                    Row{}.add(xx).add(c).add(Ek).add(F).add(minus(E, Ek)).add(G).add(D)
                        .add(B).add(w));
    }
    for (long ll = 0; ll < m - 1; ++ll) {
        std::vector<int> Fl = slice(F, ll * (3 * m + 1), 3 * m + 1);
        lb.add_vote(4, static_cast<int>(ll), 1,
                    Row{}.add(Fl).add(c).add(minus(F, Fl)).add(G).add(D).add(E).add(B)
                        .add(w).add(xx));
    }

    if (lb.flat != 2 * n + 2 * m)
        throw std::logic_error("internal error: voter-partition vote total is off");

    lb.name_pool("B", names, B);
    lb.name_pool("D", names, D);
    lb.name_pool("E", names, E);
    lb.name_pool("F", names, F);
    lb.name_pool("G", names, G);
    lb.name_pool("c", names, {c});
    lb.name_pool("w", names, {w});
    lb.name_pool("x", names, {xx});

    CcpvReduction red;
    red.source = x;
    red.instance.code = rule == TieRule::TE ? ControlType::CCPV_TE : ControlType::CCPV_TP;
    red.instance.designated = names[w];
    red.layout = std::move(lb.layout);
    red.instance.election = Election(std::move(names), std::move(lb.votes));
    validate(red.instance);
    return red;
}

ControlAction construction1_witness(const Construction1& built, ControlType code,
                                    const std::vector<int>& hitting_set) {
    if (!construction1_supports(code))
        throw input_error("unsupported control type " + to_string(code));
    check_hitting_set(built.source.hs, hitting_set, built.k);
    std::vector<int> chosen = hitting_set;
    std::sort(chosen.begin(), chosen.end());
    const std::vector<CandidateId>& B = built.layout.pool("B");

    if (adds_candidates(code)) {
        AddCandidates a;
        for (int e : chosen)
            a.added.push_back(B[e]);
        return a;
    }
    if (code == ControlType::DCDC) {
        // deleting the complement needs the hitting set padded to size k
        std::vector<char> in(B.size(), 0);
        for (int e : chosen)
            in[e] = 1;
        long need = built.k - static_cast<long>(chosen.size());
        for (std::size_t e = 0; e < B.size() && need > 0; ++e)
            if (!in[e]) {
                in[e] = 1;
                --need;
            }
        DeleteCandidates a;
        for (std::size_t e = 0; e < B.size(); ++e)
            if (!in[e])
                a.deleted.push_back(B[e]);
        return a;
    }
    PartitionCandidates a;
    for (int e : chosen)
        a.first_group.push_back(B[e]);
    a.first_group.push_back(built.layout.pool("c")[0]);
    a.first_group.push_back(built.layout.pool("d")[0]);
    a.first_group.push_back(built.layout.pool("w")[0]);
    return a;
}

ControlAction ccdc_witness(const CcdcReduction& red, const std::vector<int>& hitting_set) {
    check_hitting_set(red.source, hitting_set, red.source.budget);
    const HittingSetInstance& hs = red.source;
    const long n = static_cast<long>(hs.sets.size());
    const long k = hs.budget;

    // Deleting two prefix members of one ballot pulls the first padded rival
    // into the decisive level alongside the designated candidate, so the
    // deletion set has to hit every ballot prefix exactly once. Search the
    // subsets of the hitting set for one that never covers a set twice and
    // patch each missed set by deleting one of its private filler candidates.
    std::vector<int> base = hitting_set;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    const std::size_t p = base.size();

    std::vector<long> filler_start(n), filler_len(n);
    std::vector<unsigned long> covers(n, 0);
    long used = 0;
    for (long i = 0; i < n; ++i) {
        filler_start[i] = used;
        filler_len[i] = n + k - static_cast<long>(hs.sets[i].size());
        used += filler_len[i];
        for (std::size_t t = 0; t < p; ++t)
            if (std::find(hs.sets[i].begin(), hs.sets[i].end(), base[t]) != hs.sets[i].end())
                covers[i] |= 1ul << t;
    }

    long best_cost = -1;
    unsigned long best_mask = 0;
    for (unsigned long mask = 0; mask < (1ul << p); ++mask) {
        long cost = std::popcount(mask);
        if (cost > k)
            continue;
        bool ok = true;
        for (long i = 0; i < n && ok; ++i) {
            int hits = std::popcount(mask & covers[i]);
            if (hits >= 2 || (hits == 0 && filler_len[i] == 0))
                ok = false;
            else if (hits == 0)
                ++cost;
        }
        if (ok && cost <= k && (best_cost < 0 || cost < best_cost)) {
            best_cost = cost;
            best_mask = mask;
        }
    }
    if (best_cost < 0)
        throw input_error("no deletion set within budget hits every set's ballot prefix "
                          "exactly once; the construction does not preserve this instance");

    DeleteCandidates a;
    const std::vector<CandidateId>& B = red.layout.pool("B");
    const std::vector<CandidateId>& D = red.layout.pool("D");
    for (std::size_t t = 0; t < p; ++t)
        if ((best_mask >> t) & 1)
            a.deleted.push_back(B[base[t]]);
    for (long i = 0; i < n; ++i)
        if (std::popcount(best_mask & covers[i]) == 0)
            a.deleted.push_back(D[filler_start[i]]);
    return a;
}

ControlAction ccav_witness(const CcavReduction& red, const std::vector<int>& cover) {
    check_exact_cover(red.source, cover);
    AddVoters a;
    for (int i : cover)
        a.added.push_back(static_cast<int>(red.layout.flat_index(2, i)));
    std::sort(a.added.begin(), a.added.end());
    return a;
}

ControlAction ccdv_witness(const CcdvReduction& red, const std::vector<int>& cover) {
    check_exact_cover(red.source, cover);
    DeleteVoters a;
    for (int i : cover)
        a.deleted.push_back(static_cast<int>(red.layout.flat_index(1, i)));
    std::sort(a.deleted.begin(), a.deleted.end());
    return a;
}

ControlAction ccpv_witness(const CcpvReduction& red, const std::vector<int>& cover) {
    check_exact_cover(red.source, cover);
    PartitionVoters a;
    for (int i : cover)
        a.first_group.push_back(static_cast<int>(red.layout.flat_index(1, i)));
    long m = static_cast<long>(red.source.elements.size()) / 3;
    for (long kk = 0; kk <= m; ++kk)
        a.first_group.push_back(static_cast<int>(red.layout.flat_index(3, static_cast<int>(kk))));
    std::sort(a.first_group.begin(), a.first_group.end());
    return a;
}

} // namespace bvc
