#include "necpres/election.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace necpres {

namespace {

bool is_permutation_of_all(const std::vector<int>& order, int m, std::vector<char>& seen) {
    if (static_cast<int>(order.size()) != m) return false;
    std::fill(seen.begin(), seen.end(), 0);
    for (int c : order) {
        if (c < 0 || c >= m || seen[c]) return false;
        seen[c] = 1;
    }
    return true;
}

}  // namespace

std::int64_t Election::voter_count() const {
    std::int64_t total = 0;
    for (const auto& t : types) total += t.count;
    return total;
}

std::vector<std::vector<int>> Election::rank_table() const {
    std::vector<std::vector<int>> ranks(types.size(), std::vector<int>(labels.size(), -1));
    for (size_t t = 0; t < types.size(); ++t)
        for (size_t pos = 0; pos < types[t].order.size(); ++pos)
            ranks[t][types[t].order[pos]] = static_cast<int>(pos);
    return ranks;
}

int PartyInstance::max_party_size() const {
    size_t s = 0;
    for (const auto& p : parties) s = std::max(s, p.size());
    return static_cast<int>(s);
}

std::vector<int> PartyInstance::party_map() const {
    std::vector<int> map(election.candidate_count(), -1);
    for (size_t j = 0; j < parties.size(); ++j)
        for (int c : parties[j]) {
            if (c >= 0 && c < static_cast<int>(map.size())) map[c] = static_cast<int>(j);
        }
    return map;
}

void validate(const PartyInstance& instance) {
    const Election& e = instance.election;
    const int m = e.candidate_count();
    if (m == 0) throw std::invalid_argument("election: no candidates");
    if (e.types.empty()) throw std::invalid_argument("election: no voters");

    std::vector<char> seen(m, 0);
    for (size_t t = 0; t < e.types.size(); ++t) {
        const auto& vt = e.types[t];
        if (vt.count < 1)
            throw std::invalid_argument("voter type " + std::to_string(t) + ": count must be >= 1");
        if (!is_permutation_of_all(vt.order, m, seen))
            throw std::invalid_argument("voter type " + std::to_string(t) +
                                        ": order is not a permutation of the candidate set");
    }
    for (size_t t = 0; t + 1 < e.types.size(); ++t)
        for (size_t u = t + 1; u < e.types.size(); ++u)
            if (e.types[t].order == e.types[u].order)
                throw std::invalid_argument("voter types " + std::to_string(t) + " and " +
                                            std::to_string(u) + ": identical orders not compressed");

    if (instance.parties.empty()) throw std::invalid_argument("partition: no parties");
    std::vector<int> owner(m, -1);
    for (size_t j = 0; j < instance.parties.size(); ++j) {
        const auto& block = instance.parties[j];
        if (block.empty())
            throw std::invalid_argument("party " + std::to_string(j) + ": empty block");
        for (int c : block) {
            if (c < 0 || c >= m)
                throw std::invalid_argument("party " + std::to_string(j) +
                                            ": candidate index out of range");
            if (owner[c] != -1)
                throw std::invalid_argument("party " + std::to_string(j) + ": candidate " +
                                            e.labels[c] + " already in party " +
                                            std::to_string(owner[c]));
            owner[c] = static_cast<int>(j);
        }
    }
    for (int c = 0; c < m; ++c)
        if (owner[c] == -1)
            throw std::invalid_argument("partition does not cover C: candidate " + e.labels[c] +
                                        " is in no party");

    if (instance.distinguished < 0 || instance.distinguished >= m)
        throw std::invalid_argument("distinguished candidate index out of range");
}

std::vector<VoterType> compress_voter_types(std::vector<VoterType> types, int candidate_count) {
    std::vector<char> seen(candidate_count, 0);
    std::map<std::vector<int>, std::int64_t> merged;
    std::vector<std::vector<int>> first_seen;  // preserve first-appearance order
    for (auto& vt : types) {
        if (!is_permutation_of_all(vt.order, candidate_count, seen))
            throw std::invalid_argument("compress: order is not a permutation of the candidate set");
        if (vt.count < 1) throw std::invalid_argument("compress: count must be >= 1");
        auto it = merged.find(vt.order);
        if (it == merged.end()) {
            merged.emplace(vt.order, vt.count);
            first_seen.push_back(std::move(vt.order));
        } else {
            it->second += vt.count;
        }
    }
    std::vector<VoterType> out;
    out.reserve(first_seen.size());
    for (auto& order : first_seen) {
        std::int64_t count = merged.at(order);
        out.push_back(VoterType{std::move(order), count});
    }
    return out;
}

std::vector<VoterType> compress_voter_types(const std::vector<std::vector<int>>& raw_orders,
                                            int candidate_count) {
    std::vector<VoterType> types;
    types.reserve(raw_orders.size());
    for (const auto& o : raw_orders) types.push_back(VoterType{o, 1});
    return compress_voter_types(std::move(types), candidate_count);
}

ReducedElection reduce(const PartyInstance& instance, const std::vector<int>& nominees) {
    const Election& e = instance.election;
    const int m = e.candidate_count();

    std::vector<char> nominated(m, 0);
    for (int c : nominees) {
        if (c < 0 || c >= m) throw std::invalid_argument("reduce: nominee index out of range");
        nominated[c] = 1;
    }
    for (size_t j = 0; j < instance.parties.size(); ++j) {
        int picks = 0;
        for (int c : instance.parties[j]) picks += nominated[c];
        if (picks != 1)
            throw std::invalid_argument("reduce: party " + std::to_string(j) + " has " +
                                        std::to_string(picks) + " nominees, expected exactly 1");
    }

    ReducedElection r;
    r.parent = &instance;
    for (int c = 0; c < m; ++c)
        if (nominated[c]) r.nominees.push_back(c);
    r.positions.assign(e.types.size(), std::vector<int>(m, -1));
    for (size_t t = 0; t < e.types.size(); ++t) {
        int pos = 0;
        for (int c : e.types[t].order)
            if (nominated[c]) r.positions[t][c] = pos++;
    }
    return r;
}

MajorityMatrix pairwise_matrix(const Election& election) {
    const int m = election.candidate_count();
    MajorityMatrix n(m);
    for (const auto& vt : election.types) {
        for (size_t i = 0; i < vt.order.size(); ++i)
            for (size_t j = i + 1; j < vt.order.size(); ++j)
                n.at(vt.order[i], vt.order[j]) += vt.count;
    }
    return n;
}

MajorityMatrix pairwise_matrix(const ReducedElection& reduced) {
    const int m = reduced.election().candidate_count();
    MajorityMatrix n(m);
    const auto& types = reduced.election().types;
    for (size_t t = 0; t < types.size(); ++t) {
        // walk nominees in restricted order
        std::vector<int> by_pos(reduced.nominees.size());
        for (int c : reduced.nominees) by_pos[reduced.positions[t][c]] = c;
        for (size_t i = 0; i < by_pos.size(); ++i)
            for (size_t j = i + 1; j < by_pos.size(); ++j)
                n.at(by_pos[i], by_pos[j]) += types[t].count;
    }
    return n;
}

}  // namespace necpres
