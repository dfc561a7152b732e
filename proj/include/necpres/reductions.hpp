#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "necpres/election.hpp"
#include "necpres/scoring.hpp"

namespace necpres {

// A 3-CNF formula in which every variable occurs exactly twice positively
// and twice negatively (so 3m = 4n and n is a multiple of 3). Literals are
// +v / -v for v in 1..variables.
struct Formula22E3 {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

void validate_formula(const Formula22E3& formula);

// Exhaustive truth-assignment scan; first satisfying assignment or nullopt.
std::optional<std::vector<bool>> enumerate_assignments(const Formula22E3& formula,
                                                       int max_variables = 24);
bool satisfies(const Formula22E3& formula, const std::vector<bool>& assignment);

// Uniform random (2,2)-E3 formula; requires variables % 3 == 0.
Formula22E3 random_formula22e3(int variables, std::uint64_t seed);

struct HittingSetInstance {
    int elements = 0;
    std::vector<std::vector<int>> sets;  // 0-based element indices
    int budget = 0;                      // k
};

void validate_hitting_set(const HittingSetInstance& instance);
std::optional<std::vector<int>> exhaustive_hitting_set(const HittingSetInstance& instance,
                                                       std::int64_t subset_budget = 1 << 20);

// k color classes of r vertices each; edges only between distinct classes.
struct MulticoloredGraph {
    int classes = 0;    // k
    int class_size = 0; // r
    // (class i, vertex a, class j, vertex b) with i < j, all 0-based
    std::vector<std::array<int, 4>> edges;
};

void validate_graph(const MulticoloredGraph& graph);
// One vertex index per class forming a clique, or nullopt.
std::optional<std::vector<int>> exhaustive_clique(const MulticoloredGraph& graph,
                                                  std::int64_t tuple_budget = 1 << 22);

// Instance generators mirroring the hardness constructions. Set-valued
// placeholders in the source profiles are pinned to the canonical candidate
// index order (reversed inside reversed contexts), so generators are pure
// and bit-stable. Each generated instance is a YES instance of the decision
// problem exactly when the source instance is a NO instance.
PartyInstance sat_to_short(const Formula22E3& formula, const ShortRule& family);
PartyInstance sat_to_vetolike(const Formula22E3& formula, const VetoLikeRule& family);
PartyInstance hitting_set_to_short(const HittingSetInstance& instance, const ShortRule& family);
PartyInstance hitting_set_to_vetolike(const HittingSetInstance& instance,
                                      const VetoLikeRule& family);
PartyInstance sat_to_ranked_pairs(const Formula22E3& formula);
PartyInstance clique_to_ranked_pairs(const MulticoloredGraph& graph);

}  // namespace necpres
