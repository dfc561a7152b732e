#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "necpres/io.hpp"
#include "necpres/reductions.hpp"
#include "necpres/rules.hpp"
#include "necpres/solvers.hpp"

namespace {

// exit codes: 0 ok, 1 usage, 2 parse error, 3 budget exceeded,
// 4 solver disagreement, 5 invalid certificate
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagree = 4;
constexpr int kExitBadCert = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::int64_t bruteforce_budget() {
    if (const char* env = std::getenv("NECPRES_BRUTEFORCE_BUDGET")) return std::atoll(env);
    return necpres::kDefaultBruteforceBudget;
}

necpres::PartyInstance load_instance(const std::string& file, const std::string& parties_file) {
    if (!parties_file.empty()) return necpres::parse_preflib(read_file(file), read_file(parties_file));
    return necpres::parse_instance(read_file(file));
}

necpres::Verdict run_solver(const necpres::PartyInstance& instance, const necpres::RuleSpec& rule,
                            const std::string& solver) {
    using namespace necpres;
    if (solver == "auto") return solve_auto(instance, rule, bruteforce_budget());
    if (solver == "bruteforce") return solve_bruteforce(instance, rule, bruteforce_budget());
    if (solver == "borda") {
        if (!std::holds_alternative<BordaRule>(rule))
            throw std::runtime_error("--solver borda needs --rule borda");
        return solve_borda(instance);
    }
    if (solver == "copeland") {
        const auto* c = std::get_if<CopelandSpec>(&rule);
        if (!c) throw std::runtime_error("--solver copeland needs --rule copeland:<num>/<den>");
        return solve_copeland(instance, c->alpha);
    }
    if (solver == "maximin") {
        if (!std::holds_alternative<MaximinSpec>(rule))
            throw std::runtime_error("--solver maximin needs --rule maximin");
        return solve_maximin(instance);
    }
    if (solver == "short") {
        const auto* s = std::get_if<ShortRule>(&rule);
        if (!s) throw std::runtime_error("--solver short needs --rule short:a1,...,al");
        return solve_short_fpt(instance, *s);
    }
    if (solver == "vetolike") {
        const auto* v = std::get_if<VetoLikeRule>(&rule);
        if (!v) throw std::runtime_error("--solver vetolike needs --rule vetolike:a;a1,...,al");
        return solve_vetolike_fpt(instance, *v);
    }
    throw std::runtime_error("unknown solver '" + solver + "'");
}

int cmd_solve(const std::string& file, const std::string& parties_file, const std::string& rule_id,
              const std::string& solver, const std::string& out_path) {
    const auto instance = load_instance(file, parties_file);
    const auto rule = necpres::parse_rule(rule_id);
    const auto start = std::chrono::steady_clock::now();
    const auto verdict = run_solver(instance, rule, solver);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const std::string report = necpres::verdict_report(instance, verdict, ms);
    if (!out_path.empty()) write_file(out_path, report);
    std::cout << report;
    return 0;
}

int cmd_check(const std::string& file, const std::string& cert_path) {
    const auto instance = necpres::parse_instance(read_file(file));
    std::string rule_id;
    const auto cert = necpres::parse_certificate(instance, read_file(cert_path), &rule_id);
    const auto rule = necpres::parse_rule(rule_id);
    const auto result = necpres::check_certificate(instance, rule, cert);
    if (result.valid) {
        std::cout << "certificate valid: " << instance.election.labels[cert.witness]
                  << " defeats the distinguished candidate under " << rule_id << "\n";
        return 0;
    }
    std::cout << "certificate INVALID: " << result.reason << "\n";
    return kExitBadCert;
}

int cmd_crosscheck(const std::string& file, const std::string& rule_id) {
    const auto instance = necpres::parse_instance(read_file(file));
    const auto rule = necpres::parse_rule(rule_id);
    const auto specialized = necpres::solve_auto(instance, rule, bruteforce_budget());
    const auto brute = necpres::solve_bruteforce(instance, rule, bruteforce_budget());
    std::cout << "specialized (" << specialized.solver << "): " << (specialized.yes ? "YES" : "NO")
              << "\n";
    std::cout << "bruteforce: " << (brute.yes ? "YES" : "NO") << "\n";
    if (specialized.yes != brute.yes) {
        std::cout << "DISAGREEMENT\n";
        return kExitDisagree;
    }
    std::cout << "agreement\n";
    return 0;
}

int cmd_reduce(const std::string& from, const std::string& rule_id, const std::string& in_path,
               const std::string& out_path) {
    using namespace necpres;
    const std::string text = read_file(in_path);
    PartyInstance instance;
    std::vector<std::string> comments;
    if (from == "sat") {
        const auto formula = parse_dimacs(text);
        comments.push_back("generated from a (2,2)-E3-SAT formula: " +
                           std::to_string(formula.variables) + " variables, " +
                           std::to_string(formula.clause_count()) + " clauses");
        if (rule_id == "rankedpairs" || rule_id.rfind("rankedpairs:", 0) == 0) {
            instance = sat_to_ranked_pairs(formula);
            comments.push_back("target rule: ranked pairs (12 voters)");
        } else {
            const auto rule = parse_rule(rule_id);
            if (const auto* s = std::get_if<ShortRule>(&rule)) {
                instance = sat_to_short(formula, *s);
            } else if (const auto* v = std::get_if<VetoLikeRule>(&rule)) {
                instance = sat_to_vetolike(formula, *v);
            } else {
                throw std::runtime_error("sat reduction targets short, vetolike or rankedpairs");
            }
            comments.push_back("target rule: " + rule_id);
        }
        comments.push_back("voters: the proof profile with set placeholders pinned to the "
                           "candidate index order");
    } else if (from == "hittingset") {
        const auto hs = parse_hitting_set(text);
        comments.push_back("generated from a hitting set instance: " +
                           std::to_string(hs.elements) + " elements, " +
                           std::to_string(hs.sets.size()) + " sets, budget " +
                           std::to_string(hs.budget));
        const auto rule = parse_rule(rule_id);
        if (const auto* s = std::get_if<ShortRule>(&rule)) {
            instance = hitting_set_to_short(hs, *s);
        } else if (const auto* v = std::get_if<VetoLikeRule>(&rule)) {
            instance = hitting_set_to_vetolike(hs, *v);
        } else {
            throw std::runtime_error("hittingset reduction targets short or vetolike rules");
        }
        comments.push_back("target rule: " + rule_id);
    } else if (from == "clique") {
        const auto graph = parse_graph(text);
        instance = clique_to_ranked_pairs(graph);
        comments.push_back("generated from a multicolored clique instance: k=" +
                           std::to_string(graph.classes) + ", r=" +
                           std::to_string(graph.class_size) + ", " +
                           std::to_string(graph.edges.size()) + " edges (20 voters)");
        comments.push_back("target rule: ranked pairs");
    } else {
        throw std::runtime_error("--from must be sat, hittingset or clique");
    }
    write_file(out_path, serialize_instance(instance, comments));
    std::cout << "wrote " << out_path << " (" << instance.election.candidate_count()
              << " candidates, " << instance.party_count() << " parties, "
              << instance.election.voter_count() << " voters)\n";
    return 0;
}

int cmd_stats(const std::string& file) {
    const auto instance = necpres::parse_instance(read_file(file));
    const auto& e = instance.election;
    std::cout << "candidates |C| = " << e.candidate_count() << "\n";
    std::cout << "voters |V| = " << e.voter_count() << "\n";
    std::cout << "voter types tau = " << e.type_count() << "\n";
    std::cout << "parties t = " << instance.party_count() << "\n";
    std::cout << "max party size s = " << instance.max_party_size() << "\n";
    std::cout << "distinguished = " << e.labels[instance.distinguished] << "\n";
    const auto n = necpres::pairwise_matrix(e);
    int defeats = 0, ties = 0;
    std::int64_t heaviest = 0;
    for (int c = 0; c < n.n; ++c)
        for (int d = c + 1; d < n.n; ++d) {
            if (n.at(c, d) == n.at(d, c)) ++ties;
            else ++defeats;
            heaviest = std::max({heaviest, n.at(c, d), n.at(d, c)});
        }
    std::cout << "pairwise: " << defeats << " decided pairs, " << ties
              << " ties, heaviest margin count " << heaviest << "\n";
    return 0;
}

int cmd_gen(int candidates, int parties, std::int64_t voters, int types, std::uint64_t seed,
            const std::string& out_path) {
    const auto instance = necpres::generate_random(candidates, parties, voters, types, seed);
    const std::string text = necpres::serialize_instance(
        instance, {"random instance: seed " + std::to_string(seed)});
    if (!out_path.empty()) {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int cmd_bench(const std::string& suite) {
    using clock = std::chrono::steady_clock;
    if (suite != "poly")
        throw std::runtime_error("unknown bench suite '" + suite + "' (available: poly)");
    std::cout << "suite poly: borda / copeland:1/2 / maximin on random instances\n";
    std::cout << "|C|   t    |V|    rule          verdict  ms\n";
    for (int m : {50, 100, 200}) {
        const int t = m / 4;
        const std::int64_t voters = 5 * m;
        const auto instance =
            necpres::generate_random(m, t, voters, std::min<std::int64_t>(voters, 200), 1234);
        for (const std::string rule_id : {"borda", "copeland:1/2", "maximin"}) {
            const auto rule = necpres::parse_rule(rule_id);
            const auto start = clock::now();
            const auto verdict = necpres::solve_auto(instance, rule);
            const double ms =
                std::chrono::duration<double, std::milli>(clock::now() - start).count();
            std::printf("%-5d %-4d %-6lld %-13s %-8s %.1f\n", m, t,
                        static_cast<long long>(voters), rule_id.c_str(),
                        verdict.yes ? "YES" : "NO", ms);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"necessary-winner solver for elections with party nominations"};
    app.require_subcommand(1);

    std::string file, parties_file, rule_id = "borda", solver = "auto", out_path, cert_path;
    std::string from, in_path, suite = "poly";
    int gen_candidates = 8, gen_parties = 3, gen_types = 3;
    std::int64_t gen_voters = 7;
    std::uint64_t gen_seed = 1;

    auto* solve = app.add_subcommand("solve", "decide whether p wins every reduced election");
    solve->add_option("--file", file, "instance file")->required();
    solve->add_option("--parties", parties_file, "sidecar party file (preflib import)");
    solve->add_option("--rule", rule_id, "voting rule id")->required();
    solve->add_option("--solver", solver, "auto|borda|copeland|maximin|short|vetolike|bruteforce");
    solve->add_option("--out", out_path, "write the verdict report to this path");

    auto* check = app.add_subcommand("check", "re-validate a NO certificate");
    check->add_option("--file", file, "instance file")->required();
    check->add_option("--certificate", cert_path, "verdict report (json)")->required();

    auto* crosscheck = app.add_subcommand("crosscheck", "specialized solver vs brute force");
    crosscheck->add_option("--file", file, "instance file")->required();
    crosscheck->add_option("--rule", rule_id, "voting rule id")->required();

    auto* reduce = app.add_subcommand("reduce", "compile a source problem into an instance");
    reduce->add_option("--from", from, "sat|hittingset|clique")->required();
    reduce->add_option("--rule", rule_id, "target rule id");
    reduce->add_option("--in", in_path, "source problem file")->required();
    reduce->add_option("--out", out_path, "output instance file")->required();

    auto* stats = app.add_subcommand("stats", "print instance statistics");
    stats->add_option("--file", file, "instance file")->required();

    auto* bench = app.add_subcommand("bench", "timing sweeps for the polynomial solvers");
    bench->add_option("--suite", suite, "suite name (poly)");

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--candidates", gen_candidates, "number of candidates");
    gen->add_option("--parties", gen_parties, "number of parties");
    gen->add_option("--voters", gen_voters, "number of voters");
    gen->add_option("--types", gen_types, "number of voter types");
    gen->add_option("--seed", gen_seed, "rng seed")->required();
    gen->add_option("--out", out_path, "output path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, parties_file, rule_id, solver, out_path);
        if (check->parsed()) return cmd_check(file, cert_path);
        if (crosscheck->parsed()) return cmd_crosscheck(file, rule_id);
        if (reduce->parsed()) return cmd_reduce(from, rule_id, in_path, out_path);
        if (stats->parsed()) return cmd_stats(file);
        if (bench->parsed()) return cmd_bench(suite);
        if (gen->parsed())
            return cmd_gen(gen_candidates, gen_parties, gen_voters, gen_types, gen_seed, out_path);
    } catch (const necpres::ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitParse;
    } catch (const necpres::BudgetError& err) {
        std::cerr << "budget exceeded: " << err.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
