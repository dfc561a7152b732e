#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "necpres/io.hpp"
#include "necpres/reductions.hpp"
#include "necpres/rules.hpp"
#include "necpres/solvers.hpp"

using namespace necpres;

namespace {

const char* kExample1 =
    "necpres 1\n"
    "candidates: p a1 a2 b1 b2\n"
    "party: *p\n"
    "party: a1 a2\n"
    "party: b1 b2\n"
    "votes:\n"
    "1: p > a1 > b1 > a2 > b2\n"
    "1: a1 > p > b1 > a2 > b2\n"
    "1: b1 > b2 > a2 > p > a1\n";

}  // namespace

TEST_CASE("parse the example fixture") {
    const auto inst = parse_instance(kExample1);
    CHECK(inst.election.candidate_count() == 5);
    CHECK(inst.election.voter_count() == 3);
    CHECK(inst.party_count() == 3);
    CHECK(inst.distinguished == 0);
    CHECK(inst.election.labels[3] == "b1");
}

TEST_CASE("parse errors carry line positions") {
    CHECK_THROWS_WITH_AS(parse_instance("necpres 1\ncandidates: a\nparty: *a\nvotes:\n"),
                         doctest::Contains("no voters"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance("necpres 1\ncandidates: a b\nparty: *a b\nvotes:\n1: a > q\n"),
        doctest::Contains("unknown candidate label 'q'"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance("necpres 1\ncandidates: a b\nparty: *a *b\nvotes:\n1: a > b\n"),
        doctest::Contains("duplicate '*'"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance("necpres 1\ncandidates: a b\nparty: *a b\nvotes:\nx: a > b\n"),
        doctest::Contains("malformed count"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance("necpres 1\ncandidates: a b\nparty: a b\nvotes:\n1: a > b\n"),
        doctest::Contains("no distinguished"), ParseError);
    try {
        parse_instance("necpres 1\ncandidates: a b\nparty: *a b\nvotes:\n1: a > q\n");
        FAIL("expected throw");
    } catch (const ParseError& err) {
        CHECK(err.line == 5);
    }
}

TEST_CASE("serialize then parse is the identity on the normalized form") {
    std::vector<PartyInstance> corpus;
    corpus.push_back(parse_instance(kExample1));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        corpus.push_back(generate_random(7, 3, 9, 4, seed));
    corpus.push_back(sat_to_short(random_formula22e3(3, 2), ShortRule{{2, 1}}));
    corpus.push_back(sat_to_ranked_pairs(random_formula22e3(3, 3)));

    for (const auto& inst : corpus) {
        const std::string once = serialize_instance(inst);
        const std::string twice = serialize_instance(parse_instance(once));
        CHECK(once == twice);
    }
}

TEST_CASE("comments round through serialization") {
    const auto inst = parse_instance(kExample1);
    const std::string text = serialize_instance(inst, {"generated for a test"});
    CHECK(text.find("# generated for a test") == 0);
    CHECK_NOTHROW(parse_instance(text));
}

TEST_CASE("random generation is seed-deterministic") {
    const auto a = generate_random(8, 3, 7, 3, 99);
    const auto b = generate_random(8, 3, 7, 3, 99);
    CHECK(serialize_instance(a) == serialize_instance(b));
    CHECK(serialize_instance(a) != serialize_instance(generate_random(8, 3, 7, 3, 100)));
}

TEST_CASE("random generation boundaries") {
    const auto all_singletons = generate_random(5, 5, 4, 2, 7);
    CHECK(all_singletons.max_party_size() == 1);
    CHECK_THROWS_AS(generate_random(3, 4, 5, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_random(3, 2, 2, 5, 1), std::invalid_argument);

    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const auto inst = generate_random(4, 2, 6, 3, seed);
        CHECK(inst.election.type_count() <= 3);  // collisions may merge
        CHECK(inst.election.voter_count() == 6);
    }
}

TEST_CASE("verdict reports are stable apart from the wall time") {
    const auto inst = parse_instance(kExample1);
    const auto verdict = solve_borda(inst);
    const std::string a = verdict_report(inst, verdict, 1.0);
    const std::string b = verdict_report(inst, verdict, 2.0);
    const auto scrub = [](std::string s) {
        const auto pos = s.find("\"wall_ms\"");
        const auto end = s.find('\n', pos);
        return s.erase(pos, end - pos);
    };
    CHECK(a != b);
    CHECK(scrub(a) == scrub(b));
}

TEST_CASE("certificates round-trip through reports") {
    const auto inst = parse_instance(kExample1);
    const auto verdict = solve_vetolike_fpt(inst, VetoLikeRule{1, {0}});
    REQUIRE_FALSE(verdict.yes);
    const std::string report = verdict_report(inst, verdict, 0.0);
    std::string rule_id_out;
    const auto cert = parse_certificate(inst, report, &rule_id_out);
    CHECK(rule_id_out == "vetolike:1;0");
    CHECK(cert.nominees == verdict.certificate->nominees);
    CHECK(cert.witness == verdict.certificate->witness);
    CHECK(check_certificate(inst, parse_rule(rule_id_out), cert).valid);

    const auto yes = solve_borda(inst);
    CHECK_THROWS_AS(parse_certificate(inst, verdict_report(inst, yes, 0.0), nullptr),
                    std::invalid_argument);
}

TEST_CASE("preflib import with a party sidecar") {
    const std::string soc =
        "# FILE NAME: test.soc\n"
        "# NUMBER ALTERNATIVES: 3\n"
        "# ALTERNATIVE NAME 1: red\n"
        "# ALTERNATIVE NAME 2: green\n"
        "# ALTERNATIVE NAME 3: blue\n"
        "2: 1,2,3\n"
        "1: 3,2,1\n";
    const std::string parties = "party: *red\nparty: green blue\n";
    const auto inst = parse_preflib(soc, parties);
    CHECK(inst.election.candidate_count() == 3);
    CHECK(inst.election.voter_count() == 3);
    CHECK(inst.party_count() == 2);
    CHECK(inst.election.labels[0] == "red");
    CHECK(inst.distinguished == 0);
    const auto n = pairwise_matrix(inst.election);
    CHECK(n.at(0, 1) == 2);
}

TEST_CASE("source problem files parse") {
    const auto f = parse_dimacs(
        "c comment\np cnf 3 4\n1 2 3 0\n-1 -2 3 0\n1 -2 -3 0\n-1 2 -3 0\n");
    CHECK(f.variables == 3);
    CHECK(f.clause_count() == 4);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);

    const auto h = parse_hitting_set("4 2\n1 2\n3 4\n");
    CHECK(h.elements == 4);
    CHECK(h.budget == 2);
    CHECK(h.sets == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    const auto g = parse_graph("3 2\n1 1 2 1\n3 2 2 1\n");
    CHECK(g.classes == 3);
    CHECK(g.edges.size() == 2);
    CHECK(g.edges[1] == std::array<int, 4>{1, 0, 2, 1});  // normalized to i < j
}

TEST_CASE("rule ids round-trip") {
    for (const std::string id : {"borda", "short:1", "short:2,1", "vetolike:1;0",
                                 "vetolike:3;2,1", "copeland:0/1", "copeland:1/2", "maximin",
                                 "rankedpairs:lex", "rankedpairs:seed=42"}) {
        CHECK(rule_id(parse_rule(id)) == id);
    }
    CHECK(rule_id(parse_rule("rankedpairs")) == "rankedpairs:lex");
    CHECK(rule_id(parse_rule("copeland:2/4")) == "copeland:1/2");
    CHECK_THROWS_AS(parse_rule("schulze"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rule("copeland:3/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rule("short:0"), std::invalid_argument);
}
