// Command-line driver: solve, certify, generate, and sweep
// manipulation instances for Borda-aggregated teams in Gale-Shapley
// matching.
//
// Exit codes: 0 success (including a certified "NO"), 1 verification
// failure, 2 usage error, 3 oracle budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "teamvote/core.hpp"
#include "teamvote/gale_shapley.hpp"
#include "teamvote/hardness.hpp"
#include "teamvote/io.hpp"
#include "teamvote/manip_men.hpp"
#include "teamvote/manip_women.hpp"
#include "teamvote/oracle.hpp"

using namespace teamvote;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::string format_order(const PreferenceOrder& o) {
    std::string s;
    for (int i = 0; i < o.k(); ++i) {
        if (i) s += ' ';
        s += std::to_string(o.ranking[i]);
    }
    return s;
}

void print_witness(const Instance& inst, const std::vector<PreferenceOrder>& profile) {
    for (const auto& b : profile) std::cout << "witness " << format_order(b) << "\n";
    auto tb = TieBreak::canonical(inst.k);
    std::cout << "aggregate " << format_order(inst.team_order(as_extras(profile), tb)) << "\n";
}

std::vector<long long> parse_x_list(const std::string& text) {
    std::vector<long long> xs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) xs.push_back(std::stoll(tok));
    return xs;
}

struct CommonOpts {
    std::string instance_path;
    std::optional<int> target;
    std::optional<int> manipulators;
};

Instance load(const CommonOpts& opt) {
    auto inst = parse_instance(read_file(opt.instance_path));
    if (opt.target) inst.target = *opt.target;
    if (opt.manipulators) inst.num_manipulators = *opt.manipulators;
    inst.validate();
    return inst;
}

int run_solve_single(const CommonOpts& opt) {
    auto inst = load(opt);
    auto tb = TieBreak::canonical(inst.k);
    auto res = inst.team.side == Side::Men ? single_manip_m(inst, inst.target, tb)
                                           : single_manip_w(inst, inst.target, tb);
    if (!res.ballot) {
        std::cout << "NO\n";
        return 0;
    }
    if (team_match(inst, inst.team_order(as_extras(std::vector{*res.ballot}), tb)) !=
        inst.target) {
        std::cerr << "internal error: witness failed re-verification\n";
        return kExitVerify;
    }
    print_witness(inst, {*res.ballot});
    return 0;
}

int run_solve_coalition(const CommonOpts& opt) {
    auto inst = load(opt);
    auto tb = TieBreak::canonical(inst.k);
    std::optional<std::vector<PreferenceOrder>> profile;
    if (inst.team.side == Side::Men)
        profile = coalition_manip_m(inst, inst.target, tb).profile;
    else
        profile = coalition_manip_w(inst, inst.target, tb).profile;
    if (!profile) {
        std::cout << "NO\n";
        return 0;
    }
    if (team_match(inst, inst.team_order(as_extras(*profile), tb)) != inst.target) {
        std::cerr << "internal error: witness failed re-verification\n";
        return kExitVerify;
    }
    print_witness(inst, *profile);
    return 0;
}

int run_oracle(const CommonOpts& opt, std::int64_t enumeration_budget) {
    auto inst = load(opt);
    auto tb = TieBreak::canonical(inst.k);
    OracleBudget budget;
    if (enumeration_budget > 0) budget.max_enumerations = enumeration_budget;
    if (inst.num_manipulators <= 1) {
        auto witness = brute_single(inst, inst.target, tb, budget);
        if (!witness) {
            std::cout << "NO\n";
            return 0;
        }
        print_witness(inst, {*witness});
        return 0;
    }
    auto witness = brute_coalition(inst, inst.num_manipulators, inst.target, tb, budget);
    if (!witness) {
        std::cout << "NO\n";
        return 0;
    }
    print_witness(inst, *witness);
    return 0;
}

int run_verify(const CommonOpts& opt, const std::string& witness_path) {
    auto inst = load(opt);
    auto tb = TieBreak::canonical(inst.k);
    nlohmann::json doc = nlohmann::json::parse(read_file(witness_path));
    if (!doc.is_array()) throw ParseError("witness file must be a JSON array of ballots");
    std::vector<PreferenceOrder> profile;
    for (const auto& row : doc) {
        PreferenceOrder o{row.get<std::vector<int>>()};
        if (o.k() != inst.k || !o.is_permutation_of_k())
            throw ParseError("witness ballot is not a permutation");
        profile.push_back(std::move(o));
    }
    int got = team_match(inst, inst.team_order(as_extras(profile), tb));
    if (got == inst.target) {
        std::cout << "OK: target " << inst.target << " is the team's match\n";
        return 0;
    }
    std::cout << "FAIL: GS matches the team with " << got << ", not " << inst.target << "\n";
    return kExitVerify;
}

int run_experiment(int max_k, int trials, std::uint64_t seed, const std::string& out_path) {
    std::ostringstream csv;
    csv << "k,num_voters,num_manipulators,side,trials,solver_successes,oracle_successes,"
           "disagreements\n";
    auto tb_cache = [](int k) { return TieBreak::canonical(k); };
    for (Side side : {Side::Men, Side::Women}) {
        for (int k = 2; k <= max_k; ++k) {
            for (int voters : {2, 3}) {
                for (int n : {1, 2}) {
                    int solver_yes = 0, oracle_yes = 0, disagreements = 0;
                    for (int t = 0; t < trials; ++t) {
                        std::uint64_t s = seed ^ (static_cast<std::uint64_t>(k) << 32) ^
                                          (static_cast<std::uint64_t>(voters) << 24) ^
                                          (static_cast<std::uint64_t>(n) << 16) ^
                                          (side == Side::Men ? 0u : 1u << 8) ^
                                          static_cast<std::uint64_t>(t);
                        auto inst = gen_random(k, voters, n, side, s);
                        auto tb = tb_cache(k);
                        bool solver, oracle;
                        if (n == 1) {
                            auto res = side == Side::Men
                                           ? single_manip_m(inst, inst.target, tb)
                                           : single_manip_w(inst, inst.target, tb);
                            solver = res.ballot.has_value();
                            oracle = brute_single(inst, inst.target, tb).has_value();
                            if (solver != oracle) ++disagreements;
                        } else {
                            if (side == Side::Men)
                                solver = coalition_manip_m(inst, inst.target, tb)
                                             .profile.has_value();
                            else
                                solver = coalition_manip_w(inst, inst.target, tb)
                                             .profile.has_value();
                            oracle = brute_coalition(inst, n, inst.target, tb).has_value();
                            if (solver && !oracle) ++disagreements;
                        }
                        solver_yes += solver;
                        oracle_yes += oracle;
                    }
                    csv << k << ',' << voters << ',' << n << ',' << side_name(side) << ','
                        << trials << ',' << solver_yes << ',' << oracle_yes << ','
                        << disagreements << '\n';
                }
            }
        }
    }
    write_output(out_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borda-team manipulation solvers for Gale-Shapley stable matching"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string out_path;
    std::string side_str = "men";
    std::string x_str;
    std::string witness_path;
    int k = 3, voters = 2, manipulators = 1;
    std::uint64_t seed = 0;
    std::int64_t budget = 0;
    long long C = -1, z = -1;
    int max_k = 4, trials = 50;
    int target_flag = -1;

    auto add_instance_opts = [&](CLI::App* sub) {
        sub->add_option("--instance", opt.instance_path, "instance file")->required();
        sub->add_option("--target", target_flag, "override the instance's target");
        sub->add_option("--manipulators", manipulators,
                        "override the instance's manipulator count");
    };

    auto* solve_single = app.add_subcommand("solve-single", "single-manipulator solver");
    add_instance_opts(solve_single);
    auto* solve_coalition = app.add_subcommand("solve-coalition", "coalition solver");
    add_instance_opts(solve_coalition);
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    add_instance_opts(oracle_cmd);
    oracle_cmd->add_option("--budget", budget, "max enumerations before refusal");

    auto* verify = app.add_subcommand("verify", "re-check a witness profile");
    add_instance_opts(verify);
    verify->add_option("--witness", witness_path, "JSON array of ballots")->required();

    auto* gen_rand = app.add_subcommand("gen-random", "seeded random instance");
    gen_rand->add_option("--k", k, "agents per side")->required();
    gen_rand->add_option("--voters", voters, "honest voter count");
    gen_rand->add_option("--manipulators", manipulators, "manipulator count");
    gen_rand->add_option("--side", side_str, "men|women");
    gen_rand->add_option("--seed", seed, "RNG seed");
    gen_rand->add_option("--out", out_path, "output path (default stdout)");

    auto* gen_red = app.add_subcommand("gen-reduction", "Permutation Sum gadget instance");
    gen_red->add_option("--X", x_str, "comma-separated X values")->required();
    gen_red->add_option("--side", side_str, "men|women");
    gen_red->add_option("--C", C, "score constant (default 2*q*k)");
    gen_red->add_option("--z", z, "low score (default C)");
    gen_red->add_option("--out", out_path, "output path (default stdout)");

    auto* experiment = app.add_subcommand("experiment", "solver-vs-oracle sweep, CSV output");
    experiment->add_option("--max-k", max_k, "largest k in the grid");
    experiment->add_option("--trials", trials, "trials per grid cell");
    experiment->add_option("--seed", seed, "RNG seed");
    experiment->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto* sub = app.get_subcommands().front();
    auto counted = [&](const std::string& name) {
        auto* o = sub->get_option_no_throw(name);
        return o && o->count() > 0;
    };
    if (counted("--target")) opt.target = target_flag;
    if (counted("--manipulators")) opt.manipulators = manipulators;

    try {
        if (sub == solve_single) return run_solve_single(opt);
        if (sub == solve_coalition) return run_solve_coalition(opt);
        if (sub == oracle_cmd) return run_oracle(opt, budget);
        if (sub == verify) return run_verify(opt, witness_path);
        if (sub == gen_rand) {
            Side side = side_str == "women" ? Side::Women : Side::Men;
            auto inst = gen_random(k, voters, manipulators, side, seed);
            write_output(out_path, serialize_instance(inst));
            return 0;
        }
        if (sub == gen_red) {
            Side side = side_str == "women" ? Side::Women : Side::Men;
            auto X = parse_x_list(x_str);
            Instance inst;
            if (C >= 0)
                inst = gen_reduction(X, side, C, z >= 0 ? z : C);
            else
                inst = gen_reduction(X, side);
            write_output(out_path, serialize_instance(inst));
            return 0;
        }
        if (sub == experiment) return run_experiment(max_k, trials, seed, out_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
