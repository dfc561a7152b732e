#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "necpres/condorcet.hpp"
#include "necpres/election.hpp"
#include "necpres/rational.hpp"
#include "necpres/scoring.hpp"

namespace necpres {

struct CopelandSpec {
    Alpha alpha;
};
struct MaximinSpec {};
struct RankedPairsSpec {
    TieBreak tiebreak;
};

using RuleSpec = std::variant<BordaRule, ShortRule, VetoLikeRule, CopelandSpec, MaximinSpec,
                              RankedPairsSpec>;

// Parses identifiers like "borda", "short:2,1", "vetolike:1;0",
// "copeland:1/2", "maximin", "rankedpairs:seed=7". Throws on malformed ids.
RuleSpec parse_rule(const std::string& id);
std::string rule_id(const RuleSpec& rule);

bool is_positional(const RuleSpec& rule);
std::optional<ScoringRuleFamily> scoring_family(const RuleSpec& rule);

// Shared evaluation state for one instance: full rank table, plus the full
// pairwise matrix when a Condorcet rule needs it. Pairwise counts are
// restriction-invariant, so the full matrix serves every reduced election.
struct EvalContext {
    const PartyInstance* instance = nullptr;
    std::vector<std::vector<int>> ranks;
    std::optional<MajorityMatrix> matrix;
    std::int64_t voters = 0;

    EvalContext() = default;
    EvalContext(const PartyInstance& inst, const RuleSpec& rule);

    const MajorityMatrix& majority() const { return *matrix; }
};

// Winner set of the reduced election over `nominees` (ascending candidate
// indices, one per party) under `rule`.
std::vector<int> rule_winners(const EvalContext& ctx, const RuleSpec& rule,
                              const std::vector<int>& nominees);
std::vector<int> rule_winners(const ReducedElection& reduced, const RuleSpec& rule);

}  // namespace necpres
