#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "necpres/election.hpp"

namespace necpres {

// Borda: (m-1, m-2, ..., 0) for m nominees.
struct BordaRule {};

// Short rule: constant prefix (a1 >= ... >= al > 0), zeros afterwards.
// short:1 is Plurality, short:1,1 is 2-Approval.
struct ShortRule {
    std::vector<std::int64_t> prefix;
};

// Veto-like rule: value a everywhere except a constant-length suffix with
// a > a1 >= ... >= al >= 0. vetolike:1;0 is Veto.
struct VetoLikeRule {
    std::int64_t a = 1;
    std::vector<std::int64_t> suffix;
};

using ScoringRuleFamily = std::variant<BordaRule, ShortRule, VetoLikeRule>;

// Throws std::invalid_argument on malformed prefix/suffix shapes.
void validate_family(const ScoringRuleFamily& family);

// Positional scores for one reduced election, in nominee order.
struct ScoreTable {
    std::vector<int> nominees;
    std::vector<std::int64_t> scores;
    std::vector<std::string> warnings;

    std::int64_t score_of(int candidate) const;
};

// The concrete scoring vector for an m-candidate reduced election. Short
// prefixes are truncated when m < l; Veto-like keeps the tail of its suffix.
// Output is non-increasing. m = 0 is rejected.
std::vector<std::int64_t> effective_vector(const ScoringRuleFamily& family, int m);

ScoreTable positional_scores(const ReducedElection& reduced, const ScoringRuleFamily& family);
// Same computation against an explicit vector (must have one entry per nominee).
ScoreTable positional_scores(const ReducedElection& reduced,
                             const std::vector<std::int64_t>& vector);

// All candidates achieving the maximum score; never empty.
std::vector<int> score_winners(const ScoreTable& table);

// Number of scored prefix positions the family designates (Borda: m).
int prefix_length(const ScoringRuleFamily& family, int m);

std::string family_id(const ScoringRuleFamily& family);

}  // namespace necpres
