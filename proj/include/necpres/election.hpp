#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace necpres {

// One equivalence class of voters: a strict linear order over all candidates
// (best first, as candidate indices) plus the number of voters holding it.
struct VoterType {
    std::vector<int> order;
    std::int64_t count = 1;
};

// A full election over the complete candidate set. Candidates are dense
// indices 0..|C|-1; labels live here and nowhere else. Immutable after
// construction by convention; all operations below are pure.
struct Election {
    std::vector<std::string> labels;
    std::vector<VoterType> types;

    int candidate_count() const { return static_cast<int>(labels.size()); }
    int type_count() const { return static_cast<int>(types.size()); }
    std::int64_t voter_count() const;

    // positions[t][c] = rank of candidate c in type t's order (0 = best).
    std::vector<std::vector<int>> rank_table() const;
};

// An election plus the party partition and the distinguished candidate.
struct PartyInstance {
    Election election;
    std::vector<std::vector<int>> parties;
    int distinguished = 0;

    int party_count() const { return static_cast<int>(parties.size()); }
    int max_party_size() const;
    // party_map()[c] = index of the party containing c; requires a valid
    // partition (call validate() first on untrusted input).
    std::vector<int> party_map() const;
    int party_of_distinguished() const { return party_map()[distinguished]; }
};

// An election restricted to one nominee per party. Restricted orders are
// materialized as rank arrays: positions[t][c] = rank of nominee c among the
// nominees in type t's order, -1 for non-nominees.
struct ReducedElection {
    const PartyInstance* parent = nullptr;
    std::vector<int> nominees;  // ascending candidate indices
    std::vector<std::vector<int>> positions;

    int nominee_count() const { return static_cast<int>(nominees.size()); }
    const Election& election() const { return parent->election; }
};

// Pairwise comparison counts: at(c,c') = number of voters preferring c to
// c'. Diagonal is fixed at 0.
struct MajorityMatrix {
    int n = 0;
    std::vector<std::int64_t> cells;

    explicit MajorityMatrix(int size = 0) : n(size), cells(static_cast<size_t>(size) * size, 0) {}
    std::int64_t& at(int c, int d) { return cells[static_cast<size_t>(c) * n + d]; }
    std::int64_t at(int c, int d) const { return cells[static_cast<size_t>(c) * n + d]; }
};

// Throws std::invalid_argument naming the first violated invariant.
void validate(const PartyInstance& instance);

// Merges identical orders, summing counts. Rejects non-permutations.
std::vector<VoterType> compress_voter_types(const std::vector<std::vector<int>>& raw_orders,
                                            int candidate_count);
std::vector<VoterType> compress_voter_types(std::vector<VoterType> types, int candidate_count);

// Builds the reduced election for a nominee set (exactly one per party).
ReducedElection reduce(const PartyInstance& instance, const std::vector<int>& nominees);

MajorityMatrix pairwise_matrix(const Election& election);
MajorityMatrix pairwise_matrix(const ReducedElection& reduced);

}  // namespace necpres
