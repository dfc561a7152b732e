#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "necpres/election.hpp"
#include "necpres/reductions.hpp"
#include "necpres/solvers.hpp"

namespace necpres {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Instance text format:
//
//   necpres 1
//   candidates: p a1 a2 b1 b2
//   party: *p
//   party: a1 a2
//   party: b1 b2
//   votes:
//   1: p > a1 > b1 > a2 > b2
//
// '#' starts a comment, '*' marks the distinguished candidate (exactly one),
// vote lines are "count: label > label > ...".
PartyInstance parse_instance(const std::string& text);
std::string serialize_instance(const PartyInstance& instance,
                               const std::vector<std::string>& comments = {});

// PrefLib strict-order import (.soc): "count: 1,2,3" lines with optional
// "# ALTERNATIVE NAME i: label" metadata. Party structure comes from a
// sidecar file of "party:" lines in the native format.
PartyInstance parse_preflib(const std::string& soc_text, const std::string& parties_text);

// Impartial-culture sampler: tau uniformly random strict orders with random
// positive counts summing to voters, a balanced random partition into t
// parties, and a random distinguished candidate. Deterministic per seed.
PartyInstance generate_random(int candidates, int parties, std::int64_t voters, int voter_types,
                              std::uint64_t seed);

// Source-problem files for the reduction generators.
// SAT: DIMACS cnf.  Hitting set: "n k" then one line of elements per set
// (1-based).  Graph: "k r" then "i a j b" edge lines (1-based).
Formula22E3 parse_dimacs(const std::string& text);
HittingSetInstance parse_hitting_set(const std::string& text);
MulticoloredGraph parse_graph(const std::string& text);

// Machine-readable verdict document (JSON). wall_ms is the only field that
// varies between identical runs.
std::string verdict_report(const PartyInstance& instance, const Verdict& verdict, double wall_ms);
// Reads back the certificate of a NO report; throws if answer is YES.
Certificate parse_certificate(const PartyInstance& instance, const std::string& report_json,
                              std::string* rule_out = nullptr);

}  // namespace necpres
