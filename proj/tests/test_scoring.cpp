#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "necpres/io.hpp"
#include "necpres/scoring.hpp"

using namespace necpres;
using test_helpers::example1;

TEST_CASE("effective vectors") {
    CHECK(effective_vector(BordaRule{}, 5) == std::vector<std::int64_t>{4, 3, 2, 1, 0});
    CHECK(effective_vector(ShortRule{{1}}, 4) == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(effective_vector(VetoLikeRule{1, {0}}, 1) == std::vector<std::int64_t>{0});
    CHECK(effective_vector(VetoLikeRule{1, {0}}, 4) == std::vector<std::int64_t>{1, 1, 1, 0});
    CHECK(effective_vector(ShortRule{{3, 2, 1}}, 2) == std::vector<std::int64_t>{3, 2});
    CHECK(effective_vector(VetoLikeRule{5, {2, 1}}, 1) == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(effective_vector(BordaRule{}, 0), std::invalid_argument);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(validate_family(ScoringRuleFamily{ShortRule{{1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_family(ScoringRuleFamily{ShortRule{{1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_family(ScoringRuleFamily{VetoLikeRule{1, {1}}}),
                    std::invalid_argument);
    CHECK_NOTHROW(validate_family(ScoringRuleFamily{VetoLikeRule{2, {1, 0}}}));
}

TEST_CASE("vectors stay non-increasing up to m = 50") {
    const std::vector<ScoringRuleFamily> families = {
        BordaRule{}, ShortRule{{1}}, ShortRule{{1, 1}}, ShortRule{{2, 1}},
        ShortRule{{5, 3, 3, 1}}, VetoLikeRule{1, {0}}, VetoLikeRule{1, {0, 0}},
        VetoLikeRule{4, {3, 1, 0}}};
    for (const auto& family : families)
        for (int m = 1; m <= 50; ++m) {
            const auto v = effective_vector(family, m);
            for (size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i] >= v[i + 1]);
        }
}

TEST_CASE("Borda scores on the example reduction") {
    const auto inst = example1();
    const auto r = reduce(inst, {0, 1, 3});
    const auto table = positional_scores(r, ScoringRuleFamily{BordaRule{}});
    CHECK(table.score_of(0) == 4);
    CHECK(table.score_of(1) == 3);
    CHECK(table.score_of(3) == 2);
    CHECK(score_winners(table) == std::vector<int>{0});
}

TEST_CASE("single nominee scores |V| times the top entry") {
    const auto inst = test_helpers::make_instance({"p"}, {{{0}, 7}}, {{0}}, 0);
    const auto r = reduce(inst, {0});
    const auto table = positional_scores(r, ScoringRuleFamily{VetoLikeRule{3, {1}}});
    CHECK(table.score_of(0) == 7 * 1);  // m <= suffix: only the tail entry applies
    const auto borda = positional_scores(r, ScoringRuleFamily{BordaRule{}});
    CHECK(borda.score_of(0) == 0);
    CHECK_FALSE(table.warnings.empty());
}

TEST_CASE("score winners tie handling") {
    ScoreTable table;
    table.nominees = {0, 4, 7};
    table.scores = {4, 4, 1};
    CHECK(score_winners(table) == std::vector<int>{0, 4});
    table.scores = {3, 3, 3};
    CHECK(score_winners(table).size() == 3);
    CHECK_THROWS_AS(score_winners(ScoreTable{}), std::invalid_argument);
}

TEST_CASE("score conservation") {
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        const auto inst = generate_random(6, 3, 8, 3, seed);
        const std::vector<ScoringRuleFamily> families = {BordaRule{}, ShortRule{{2, 1}},
                                                         VetoLikeRule{2, {1, 0}}};
        test_helpers::for_each_nomination(inst, [&](const std::vector<int>& nominees) {
            const auto r = reduce(inst, nominees);
            for (const auto& family : families) {
                const auto vec = effective_vector(family, r.nominee_count());
                const auto table = positional_scores(r, family);
                const std::int64_t total =
                    std::accumulate(table.scores.begin(), table.scores.end(), std::int64_t{0});
                const std::int64_t vec_sum =
                    std::accumulate(vec.begin(), vec.end(), std::int64_t{0});
                CHECK(total == inst.election.voter_count() * vec_sum);
            }
        });
    }
}

TEST_CASE("affine rescaling keeps winners") {
    for (std::uint64_t seed : {8u, 9u}) {
        const auto inst = generate_random(6, 3, 7, 3, seed);
        test_helpers::for_each_nomination(inst, [&](const std::vector<int>& nominees) {
            const auto r = reduce(inst, nominees);
            for (const auto& family :
                 {ScoringRuleFamily{ShortRule{{2, 1}}}, ScoringRuleFamily{BordaRule{}}}) {
                auto vec = effective_vector(family, r.nominee_count());
                const auto base = score_winners(positional_scores(r, vec));
                for (auto& entry : vec) entry = 3 * entry + 2;
                CHECK(score_winners(positional_scores(r, vec)) == base);
            }
        });
    }
}

TEST_CASE("Borda score equals the pairwise row sum") {
    for (std::uint64_t seed : {21u, 22u}) {
        const auto inst = generate_random(6, 3, 9, 4, seed);
        test_helpers::for_each_nomination(inst, [&](const std::vector<int>& nominees) {
            const auto r = reduce(inst, nominees);
            const auto table = positional_scores(r, ScoringRuleFamily{BordaRule{}});
            const auto n = pairwise_matrix(r);
            for (int c : nominees) {
                std::int64_t row = 0;
                for (int d : nominees)
                    if (d != c) row += n.at(c, d);
                CHECK(table.score_of(c) == row);
            }
        });
    }
}
