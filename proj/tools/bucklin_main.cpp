#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bvc/io.hpp"
#include "bvc/solvers.hpp"
#include "bvc/verify.hpp"

namespace {

constexpr const char* kUsage =
    "usage: bucklin <command> [options]\n"
    "\n"
    "commands:\n"
    "  winners <election-file>\n"
    "      print the winning level and winner set\n"
    "  solve <control-file> [--method brute|poly|auto] [--witness] [--cap N]\n"
    "      decide a control instance; exit 0 = YES, 1 = NO, 2 = error\n"
    "  reduce --from hs|rhs|x3c --to <target> <source-file> [-o <file>]\n"
    "      generate a control instance (or repaired hitting-set instance);\n"
    "      targets: hs -> rhs, ccdc; x3c -> ccav, ccdv, ccpv-te, ccpv-tp;\n"
    "      rhs -> ccac-u, ccac-l, dcac-u, dcac-l, dcdc, ccpc-te, ccpc-tp,\n"
    "             dcpc-te, dcpc-tp, ccrpc-te, ccrpc-tp, dcrpc-te, dcrpc-tp\n"
    "  verify [--suite fixtures|formulas|reductions|poly|properties|all]\n"
    "      [--max-n N] [--seed S]\n"
    "      run the self-verification suite; exit 0 iff every check passes\n"
    "  gen --kind election|hs|x3c --seed S [--candidates N] [--votes N]\n"
    "      [--elements N] [--sets N] [--budget K]\n"
    "      emit a random instance file, byte-identical per seed\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write '" + path + "'");
    out << text;
}

long parse_count_arg(const std::string& flag, const std::string& value) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(value, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != value.size())
        throw UsageError(flag + " takes a number, got '" + value + "'");
    return v;
}

unsigned long long parse_seed_arg(const std::string& value) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != value.size())
        throw UsageError("--seed takes a non-negative number, got '" + value + "'");
    return v;
}

// consumes "--flag value" style options; positional args stay
class Args {
public:
    Args(int argc, char** argv, int start) {
        for (int i = start; i < argc; ++i)
            rest_.emplace_back(argv[i]);
    }

    bool take_flag(const std::string& name) {
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i] == name) {
                rest_.erase(rest_.begin() + i);
                return true;
            }
        return false;
    }

    std::string take_value(const std::string& name, const std::string& fallback) {
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i] == name) {
                if (i + 1 >= rest_.size())
                    throw UsageError(name + " needs a value");
                std::string v = rest_[i + 1];
                rest_.erase(rest_.begin() + i, rest_.begin() + i + 2);
                return v;
            }
        return fallback;
    }

    std::string take_positional(const std::string& what) {
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i].rfind("--", 0) != 0 && rest_[i] != "-o") {
                std::string v = rest_[i];
                rest_.erase(rest_.begin() + i);
                return v;
            }
        throw UsageError("missing " + what);
    }

    void expect_empty() const {
        if (!rest_.empty())
            throw UsageError("unexpected argument '" + rest_[0] + "'");
    }

private:
    std::vector<std::string> rest_;
};

int cmd_winners(Args& args) {
    std::string path = args.take_positional("election file");
    args.expect_empty();
    bvc::Election e = bvc::parse_election(read_file(path));
    bvc::BucklinOutcome oc = bvc::bucklin_outcome(e);
    if (!oc.winning_level) {
        std::cout << "no winner\n";
        return 0;
    }
    std::cout << "level " << *oc.winning_level << ":";
    for (const auto& w : oc.winners)
        std::cout << " " << w;
    std::cout << "\n";
    return 0;
}

int cmd_solve(Args& args) {
    std::string method = args.take_value("--method", "auto");
    bool witness = args.take_flag("--witness");
    std::string cap_str = args.take_value("--cap", "");
    std::string path = args.take_positional("control file");
    args.expect_empty();

    bvc::ControlInstance inst = bvc::parse_control_instance(read_file(path));
    unsigned long long cap = bvc::kDefaultActionCap;
    if (!cap_str.empty())
        cap = static_cast<unsigned long long>(parse_count_arg("--cap", cap_str));

    bvc::Decision d;
    if (method == "brute")
        d = bvc::decide_brute_force(inst, cap);
    else if (method == "poly")
        d = inst.code == bvc::ControlType::DCAV ? bvc::decide_dc_adding_voters(inst)
                                                : bvc::decide_dc_deleting_voters(inst);
    else if (method == "auto")
        d = bvc::decide_auto(inst, cap);
    else
        throw UsageError("--method takes brute, poly or auto");

    std::cout << (d.yes ? "YES" : "NO") << "\n";
    if (d.yes && witness && d.witness)
        std::cout << bvc::describe(*d.witness) << "\n";
    return d.yes ? 0 : 1;
}

int cmd_reduce(Args& args) {
    std::string from = args.take_value("--from", "");
    std::string to = args.take_value("--to", "");
    std::string out = args.take_value("-o", "");
    std::string path = args.take_positional("source file");
    args.expect_empty();
    if (from.empty() || to.empty())
        throw UsageError("reduce needs --from and --to");

    if (from == "hs") {
        if (to == "rhs") {
            bvc::HsToRhsResult res = bvc::hs_to_rhs(bvc::parse_hitting_set(read_file(path)));
            if (res.trivial_yes_shortcut)
                std::cerr << "note: budget covers every element, emitting a canonical YES "
                             "instance\n";
            write_output(out, bvc::serialize_hitting_set(res.instance.hs));
            return 0;
        }
        if (to == "ccdc") {
            bvc::CcdcReduction red = bvc::hs_to_ccdc(bvc::parse_hitting_set(read_file(path)));
            write_output(out, bvc::serialize_control_instance(red.instance));
            return 0;
        }
        throw UsageError("targets for --from hs: rhs, ccdc");
    }
    if (from == "rhs") {
        auto code = bvc::control_type_from_string(to);
        if (!code || !bvc::construction1_supports(*code))
            throw UsageError("targets for --from rhs: ccac-u, ccac-l, dcac-u, dcac-l, dcdc, "
                             "ccpc-te, ccpc-tp, dcpc-te, dcpc-tp, ccrpc-te, ccrpc-tp, "
                             "dcrpc-te, dcrpc-tp");
        bvc::RestrictedHittingSetInstance rhs =
            bvc::as_restricted(bvc::parse_hitting_set(read_file(path)));
        write_output(out, bvc::serialize_control_instance(bvc::wrap_construction1(rhs, *code)));
        return 0;
    }
    if (from == "x3c") {
        std::string text = read_file(path);
        if (to == "ccav") {
            write_output(out, bvc::serialize_control_instance(
                                  bvc::x3c_to_ccav(bvc::parse_x3c(text)).instance));
            return 0;
        }
        if (to == "ccdv") {
            write_output(out, bvc::serialize_control_instance(
                                  bvc::x3c_to_ccdv(bvc::parse_x3c(text)).instance));
            return 0;
        }
        if (to == "ccpv-te" || to == "ccpv-tp") {
            bvc::TieRule rule = to == "ccpv-te" ? bvc::TieRule::TE : bvc::TieRule::TP;
            write_output(out, bvc::serialize_control_instance(
                                  bvc::x3c_to_ccpv(bvc::parse_x3c(text), rule).instance));
            return 0;
        }
        throw UsageError("targets for --from x3c: ccav, ccdv, ccpv-te, ccpv-tp");
    }
    throw UsageError("--from takes hs, rhs or x3c");
}

int cmd_verify(Args& args) {
    bvc::VerifyConfig config;
    std::string suite = args.take_value("--suite", "all");
    config.max_n = parse_count_arg("--max-n", args.take_value("--max-n", "4"));
    config.seed = parse_seed_arg(args.take_value("--seed", "1"));
    args.expect_empty();
    if (suite != "all" && suite != "fixtures" && suite != "formulas" &&
        suite != "reductions" && suite != "poly" && suite != "properties")
        throw UsageError(
            "--suite takes fixtures, formulas, reductions, poly, properties or all");
    config.suites.insert(suite);

    bvc::VerifyReport rep = bvc::run_verification_suite(config);
    std::cout << bvc::to_text(rep);
    std::cout << rep.passed << " passed, " << rep.failed << " failed\n";
    return rep.all_passed() ? 0 : 1;
}

int cmd_gen(Args& args) {
    std::string kind = args.take_value("--kind", "");
    unsigned long long seed = parse_seed_arg(args.take_value("--seed", "1"));
    std::string out_path = args.take_value("-o", "");
    std::string text;
    if (kind == "election") {
        long candidates = parse_count_arg("--candidates", args.take_value("--candidates", "4"));
        long votes = parse_count_arg("--votes", args.take_value("--votes", "6"));
        args.expect_empty();
        text = bvc::gen_election_text(seed, candidates, votes);
    } else if (kind == "hs") {
        long elements = parse_count_arg("--elements", args.take_value("--elements", "4"));
        long sets = parse_count_arg("--sets", args.take_value("--sets", "5"));
        long budget = parse_count_arg("--budget", args.take_value("--budget", "2"));
        args.expect_empty();
        text = bvc::gen_hitting_set_text(seed, elements, sets, budget);
    } else if (kind == "x3c") {
        long elements = parse_count_arg("--elements", args.take_value("--elements", "6"));
        long sets = parse_count_arg("--sets", args.take_value("--sets", "4"));
        args.expect_empty();
        text = bvc::gen_x3c_text(seed, elements, sets);
    } else {
        throw UsageError("--kind takes election, hs or x3c");
    }
    write_output(out_path, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << kUsage;
        return 2;
    }
    std::string command = argv[1];
    Args args(argc, argv, 2);
    try {
        if (command == "winners")
            return cmd_winners(args);
        if (command == "solve")
            return cmd_solve(args);
        if (command == "reduce")
            return cmd_reduce(args);
        if (command == "verify")
            return cmd_verify(args);
        if (command == "gen")
            return cmd_gen(args);
        if (command == "--help" || command == "help") {
            std::cout << kUsage;
            return 0;
        }
        std::cerr << "error: unknown command '" << command << "'\n" << kUsage;
        return 2;
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
