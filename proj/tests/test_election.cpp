#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "necpres/election.hpp"
#include "necpres/io.hpp"

using namespace necpres;
using test_helpers::example1;
using test_helpers::make_instance;

TEST_CASE("validate accepts the three-party example") {
    CHECK_NOTHROW(validate(example1()));
}

TEST_CASE("validate reports partition gaps") {
    PartyInstance inst = example1();
    inst.parties = {{0}, {1, 2}, {3}};  // b2 unassigned
    CHECK_THROWS_WITH_AS(validate(inst), doctest::Contains("partition does not cover C"),
                         std::invalid_argument);
}

TEST_CASE("validate reports non-permutation votes") {
    PartyInstance inst = example1();
    inst.election.types[0].order = {0, 0, 3, 2, 4};
    CHECK_THROWS_WITH_AS(validate(inst), doctest::Contains("not a permutation"),
                         std::invalid_argument);
}

TEST_CASE("validate reports partition overlaps and bad counts") {
    PartyInstance inst = example1();
    inst.parties = {{0}, {1, 2}, {3, 4, 1}};
    CHECK_THROWS_AS(validate(inst), std::invalid_argument);

    inst = example1();
    inst.election.types[1].count = 0;
    CHECK_THROWS_WITH_AS(validate(inst), doctest::Contains("count"), std::invalid_argument);

    inst = example1();
    inst.distinguished = 9;
    CHECK_THROWS_AS(validate(inst), std::invalid_argument);
}

TEST_CASE("compress keeps distinct orders apart") {
    const auto types = compress_voter_types(
        std::vector<std::vector<int>>{{0, 1, 3, 2, 4}, {1, 0, 3, 2, 4}, {3, 4, 2, 0, 1}}, 5);
    CHECK(types.size() == 3);
    for (const auto& t : types) CHECK(t.count == 1);
}

TEST_CASE("compress merges identical orders") {
    const std::vector<std::vector<int>> raw(5, std::vector<int>{2, 0, 1});
    const auto types = compress_voter_types(raw, 3);
    REQUIRE(types.size() == 1);
    CHECK(types[0].count == 5);
    CHECK_THROWS_AS(compress_voter_types(std::vector<std::vector<int>>{{0, 1, 1}}, 3),
                    std::invalid_argument);
}

TEST_CASE("reduce restricts orders and keeps counts") {
    const auto inst = example1();
    const auto r = reduce(inst, {0, 1, 3});  // p, a1, b1
    CHECK(r.nominees == std::vector<int>{0, 1, 3});
    // v1: p > a1 > b1
    CHECK(r.positions[0][0] == 0);
    CHECK(r.positions[0][1] == 1);
    CHECK(r.positions[0][3] == 2);
    CHECK(r.positions[0][2] == -1);
    // v3: b1 > p > a1
    CHECK(r.positions[2][3] == 0);
    CHECK(r.positions[2][0] == 1);
    CHECK(r.positions[2][1] == 2);
}

TEST_CASE("reduce with singleton parties is the identity") {
    const auto inst = make_instance({"a", "b", "c"}, {{{2, 0, 1}, 2}}, {{0}, {1}, {2}}, 0);
    const auto r = reduce(inst, {0, 1, 2});
    CHECK(r.nominee_count() == 3);
    CHECK(r.positions[0][2] == 0);
    CHECK(r.positions[0][0] == 1);
    CHECK(r.positions[0][1] == 2);
}

TEST_CASE("reduce rejects double nominations") {
    const auto inst = example1();
    CHECK_THROWS_WITH_AS(reduce(inst, {0, 1, 2}), doctest::Contains("party"),
                         std::invalid_argument);
    CHECK_THROWS_AS(reduce(inst, {0, 1}), std::invalid_argument);
}

TEST_CASE("pairwise matrix counts the example profile") {
    const auto n = pairwise_matrix(example1().election);
    CHECK(n.at(0, 1) == 2);  // p over a1: v1, v3
    CHECK(n.at(1, 0) == 1);
    CHECK(n.at(0, 0) == 0);  // diagonal untouched
}

TEST_CASE("matrix complement identity") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const auto inst = generate_random(6, 3, 9, 4, seed);
        const auto n = pairwise_matrix(inst.election);
        const auto voters = inst.election.voter_count();
        for (int c = 0; c < n.n; ++c)
            for (int d = 0; d < n.n; ++d) {
                if (c == d) continue;
                CHECK(n.at(c, d) + n.at(d, c) == voters);
                CHECK(n.at(c, d) >= 0);
            }
    }
}

TEST_CASE("compression neutrality of the pairwise matrix") {
    std::vector<std::vector<int>> raw = {{0, 1, 2}, {2, 1, 0}, {0, 1, 2}, {1, 0, 2}, {0, 1, 2}};
    Election flat;
    flat.labels = {"a", "b", "c"};
    for (const auto& o : raw) flat.types.push_back({o, 1});
    const auto n_raw = pairwise_matrix(flat);
    Election packed;
    packed.labels = flat.labels;
    packed.types = compress_voter_types(raw, 3);
    const auto n_packed = pairwise_matrix(packed);
    CHECK(n_raw.cells == n_packed.cells);
}

TEST_CASE("reduce preserves pairwise order of surviving candidates") {
    for (std::uint64_t seed : {10u, 11u, 12u}) {
        const auto inst = generate_random(7, 3, 6, 3, seed);
        test_helpers::for_each_nomination(inst, [&](const std::vector<int>& nominees) {
            const auto r = reduce(inst, nominees);
            for (size_t t = 0; t < inst.election.types.size(); ++t) {
                const auto& order = inst.election.types[t].order;
                std::vector<int> full_rank(inst.election.candidate_count());
                for (size_t pos = 0; pos < order.size(); ++pos)
                    full_rank[order[pos]] = static_cast<int>(pos);
                for (int c : nominees)
                    for (int d : nominees) {
                        if (c == d) continue;
                        CHECK((full_rank[c] < full_rank[d]) ==
                              (r.positions[t][c] < r.positions[t][d]));
                    }
            }
        });
    }
}

TEST_CASE("type count bounds") {
    long long factorial = 1;
    for (int c = 1; c <= 4; ++c) factorial *= c;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto inst = generate_random(4, 2, 8, 8, seed);
        CHECK(inst.election.type_count() <= inst.election.voter_count());
        CHECK(inst.election.type_count() <= factorial);
    }
}
