#include "necpres/condorcet.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace necpres {

Rational CopelandTable::score_of(int candidate) const {
    for (size_t i = 0; i < nominees.size(); ++i)
        if (nominees[i] == candidate) return Rational(scaled[i], den);
    throw std::invalid_argument("score_of: candidate is not a nominee");
}

std::int64_t MaximinTable::score_of(int candidate) const {
    for (size_t i = 0; i < nominees.size(); ++i)
        if (nominees[i] == candidate) return scores[i];
    throw std::invalid_argument("score_of: candidate is not a nominee");
}

CopelandTable copeland_scores(const MajorityMatrix& matrix, const std::vector<int>& nominees,
                              std::int64_t voters, const Alpha& alpha) {
    (void)voters;
    CopelandTable table;
    table.nominees = nominees;
    table.den = alpha.den();
    table.scaled.assign(nominees.size(), 0);
    for (size_t i = 0; i < nominees.size(); ++i) {
        for (size_t j = 0; j < nominees.size(); ++j) {
            if (i == j) continue;
            const std::int64_t cd = matrix.at(nominees[i], nominees[j]);
            const std::int64_t dc = matrix.at(nominees[j], nominees[i]);
            if (cd > dc)
                table.scaled[i] += alpha.den();
            else if (cd == dc)
                table.scaled[i] += alpha.num();
        }
    }
    return table;
}

CopelandTable copeland_scores(const ReducedElection& reduced, const Alpha& alpha) {
    return copeland_scores(pairwise_matrix(reduced), reduced.nominees,
                           reduced.election().voter_count(), alpha);
}

MaximinTable maximin_scores(const MajorityMatrix& matrix, const std::vector<int>& nominees,
                            std::int64_t voters) {
    MaximinTable table;
    table.nominees = nominees;
    table.scores.assign(nominees.size(), 0);
    if (nominees.size() == 1) {
        table.scores[0] = voters;
        table.warnings.push_back("single nominee: maximin score defined as |V| by convention");
        return table;
    }
    for (size_t i = 0; i < nominees.size(); ++i) {
        std::int64_t mm = voters;
        for (size_t j = 0; j < nominees.size(); ++j)
            if (i != j) mm = std::min(mm, matrix.at(nominees[i], nominees[j]));
        table.scores[i] = mm;
    }
    return table;
}

MaximinTable maximin_scores(const ReducedElection& reduced) {
    return maximin_scores(pairwise_matrix(reduced), reduced.nominees,
                          reduced.election().voter_count());
}

RankedPairsResult ranked_pairs_winners(const MajorityMatrix& matrix,
                                       const std::vector<int>& nominees,
                                       const TieBreak& tiebreak) {
    const int m = static_cast<int>(nominees.size());
    struct Arc {
        int src, dst;  // local nominee indices
        std::int64_t weight;
        std::uint64_t priority;
    };
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const std::int64_t w = matrix.at(nominees[i], nominees[j]);
            const std::int64_t l = matrix.at(nominees[j], nominees[i]);
            if (w > l) arcs.push_back(Arc{i, j, w, 0});  // tied pairs never enter
        }
    if (tiebreak.kind == TieBreakKind::Seeded) {
        // one draw per ordered candidate pair, in a fixed scan order, so the
        // priority of a pair does not depend on which candidates are nominated
        std::mt19937_64 rng(tiebreak.seed);
        std::vector<std::uint64_t> prio(static_cast<size_t>(matrix.n) * matrix.n);
        for (auto& p : prio) p = rng();
        for (auto& a : arcs)
            a.priority = prio[static_cast<size_t>(nominees[a.src]) * matrix.n + nominees[a.dst]];
    }
    std::stable_sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (tiebreak.kind == TieBreakKind::Seeded && a.priority != b.priority)
            return a.priority < b.priority;
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });

    // incremental transitive closure over <= 64 nominees
    if (m > 64) throw std::invalid_argument("ranked pairs: more than 64 nominees unsupported");
    std::vector<std::uint64_t> reach(m, 0);
    RankedPairsResult result;
    result.tiebreak = tiebreak.id();
    std::vector<std::int64_t> indeg(m, 0);
    for (const auto& a : arcs) {
        if (reach[a.dst] >> a.src & 1) continue;  // would close a cycle
        const std::uint64_t grow = reach[a.dst] | (1ULL << a.dst);
        for (int u = 0; u < m; ++u)
            if (u == a.src || (reach[u] >> a.src & 1)) reach[u] |= grow;
        result.locked_arcs.emplace_back(nominees[a.src], nominees[a.dst]);
        ++indeg[a.dst];
    }
    for (int i = 0; i < m; ++i)
        if (indeg[i] == 0) result.winners.push_back(nominees[i]);
    return result;
}

RankedPairsResult ranked_pairs_winners(const ReducedElection& reduced, const TieBreak& tiebreak) {
    return ranked_pairs_winners(pairwise_matrix(reduced), reduced.nominees, tiebreak);
}

std::vector<int> copeland_winners(const CopelandTable& table) {
    const std::int64_t best = *std::max_element(table.scaled.begin(), table.scaled.end());
    std::vector<int> winners;
    for (size_t i = 0; i < table.nominees.size(); ++i)
        if (table.scaled[i] == best) winners.push_back(table.nominees[i]);
    return winners;
}

std::vector<int> maximin_winners(const MaximinTable& table) {
    const std::int64_t best = *std::max_element(table.scores.begin(), table.scores.end());
    std::vector<int> winners;
    for (size_t i = 0; i < table.nominees.size(); ++i)
        if (table.scores[i] == best) winners.push_back(table.nominees[i]);
    return winners;
}

}  // namespace necpres
