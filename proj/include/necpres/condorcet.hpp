#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "necpres/election.hpp"
#include "necpres/rational.hpp"

namespace necpres {

// Copeland^alpha scores as exact rationals over the common denominator
// alpha.den: a win contributes den, a tie contributes num, a loss 0.
struct CopelandTable {
    std::vector<int> nominees;
    std::vector<std::int64_t> scaled;  // score * den
    std::int64_t den = 1;

    Rational score_of(int candidate) const;
};

enum class TieBreakKind { Lexicographic, Seeded };

// Ordering policy for equal-weight arcs in Ranked Pairs. Lexicographic on
// (source, target) by default; the seeded variant draws a fixed random
// priority per ordered pair.
struct TieBreak {
    TieBreakKind kind = TieBreakKind::Lexicographic;
    std::uint64_t seed = 0;

    std::string id() const {
        return kind == TieBreakKind::Lexicographic ? "lex" : "seed=" + std::to_string(seed);
    }
};

struct RankedPairsResult {
    std::vector<std::pair<int, int>> locked_arcs;  // in lock order
    std::vector<int> winners;                      // in-degree 0 in the locked set
    std::string tiebreak;
};

CopelandTable copeland_scores(const ReducedElection& reduced, const Alpha& alpha);
CopelandTable copeland_scores(const MajorityMatrix& matrix, const std::vector<int>& nominees,
                              std::int64_t voters, const Alpha& alpha);

// MM(c) = min over rivals c' of N(c,c'). A single nominee scores |V| by
// convention (flagged in warnings).
struct MaximinTable {
    std::vector<int> nominees;
    std::vector<std::int64_t> scores;
    std::vector<std::string> warnings;

    std::int64_t score_of(int candidate) const;
};

MaximinTable maximin_scores(const ReducedElection& reduced);
MaximinTable maximin_scores(const MajorityMatrix& matrix, const std::vector<int>& nominees,
                            std::int64_t voters);

RankedPairsResult ranked_pairs_winners(const ReducedElection& reduced, const TieBreak& tiebreak);
RankedPairsResult ranked_pairs_winners(const MajorityMatrix& matrix,
                                       const std::vector<int>& nominees, const TieBreak& tiebreak);

std::vector<int> copeland_winners(const CopelandTable& table);
std::vector<int> maximin_winners(const MaximinTable& table);

}  // namespace necpres
