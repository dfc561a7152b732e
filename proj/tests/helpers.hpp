#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "necpres/election.hpp"

namespace test_helpers {

inline necpres::PartyInstance make_instance(std::vector<std::string> labels,
                                            std::vector<necpres::VoterType> types,
                                            std::vector<std::vector<int>> parties,
                                            int distinguished) {
    necpres::PartyInstance inst;
    inst.election.labels = std::move(labels);
    inst.election.types = necpres::compress_voter_types(
        std::move(types), static_cast<int>(inst.election.labels.size()));
    inst.parties = std::move(parties);
    inst.distinguished = distinguished;
    necpres::validate(inst);
    return inst;
}

// candidates p(0) a1(1) a2(2) b1(3) b2(4); parties {p},{a1,a2},{b1,b2}
inline necpres::PartyInstance example1() {
    return make_instance({"p", "a1", "a2", "b1", "b2"},
                         {{{0, 1, 3, 2, 4}, 1}, {{1, 0, 3, 2, 4}, 1}, {{3, 4, 2, 0, 1}, 1}},
                         {{0}, {1, 2}, {3, 4}}, 0);
}

// every multiset of strict orders over `candidates` with 1..max_voters voters
inline void for_each_profile(int candidates, int max_voters,
                             const std::function<void(const necpres::Election&)>& visit) {
    std::vector<int> base(candidates);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> orders;
    std::vector<int> perm = base;
    do {
        orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    necpres::Election e;
    for (int c = 0; c < candidates; ++c) e.labels.push_back(std::string(1, 'a' + c));

    std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
        if (i == orders.size()) {
            if (remaining < max_voters && !e.types.empty()) visit(e);
            return;
        }
        rec(i + 1, remaining);
        for (int take = 1; take <= remaining; ++take) {
            e.types.push_back({orders[i], take});
            rec(i + 1, remaining - take);
            e.types.pop_back();
        }
    };
    rec(0, max_voters);
}

// all nominee sets with p included, via per-party index odometer
inline void for_each_nomination(const necpres::PartyInstance& inst,
                                const std::function<void(const std::vector<int>&)>& visit) {
    const auto party_map = inst.party_map();
    const int own = party_map[inst.distinguished];
    std::vector<int> others;
    for (int j = 0; j < inst.party_count(); ++j)
        if (j != own) others.push_back(j);
    std::vector<size_t> pick(others.size(), 0);
    while (true) {
        std::vector<int> nominees = {inst.distinguished};
        for (size_t k = 0; k < others.size(); ++k)
            nominees.push_back(inst.parties[others[k]][pick[k]]);
        std::sort(nominees.begin(), nominees.end());
        visit(nominees);
        size_t k = others.size();
        while (true) {
            if (k == 0) return;
            --k;
            if (++pick[k] < inst.parties[others[k]].size()) break;
            pick[k] = 0;
        }
        if (others.empty()) return;
    }
}

}  // namespace test_helpers
