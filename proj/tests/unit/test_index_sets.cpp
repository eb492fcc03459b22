#include <doctest.h>

#include "fsrec/combinatorics.hpp"
#include "fsrec/errors.hpp"
#include "fsrec/index_sets.hpp"
#include "oracles.hpp"

using namespace fsrec;

TEST_CASE("index sets are sorted and reject repeats") {
    CHECK(IndexSet({2, 0}) == IndexSet({0, 2}));
    CHECK_THROWS_AS(IndexSet({1, 1}), DuplicateElementError);
    CHECK(IndexSet({0}).is_subset_of(IndexSet({0, 1})));
    CHECK(IndexSet({0}).with(1) == IndexSet({0, 1}));
}

TEST_CASE("the family D(K)") {
    const auto family = d_family(LevelComposition({1, 1, 0}));
    CHECK(family.m() == 2);
    CHECK(family.top() == IndexSet({0, 1}));
    CHECK(family.all().size() == 4);
    CHECK(m_of(LevelComposition({0, 2, 1})) == 1);
    CHECK(m_of(LevelComposition({0, 0, 3})) == 0);
    CHECK_THROWS_AS(validate_index_set(LevelComposition({0, 2, 1}), IndexSet({0})), InvalidIndexError);
    CHECK_THROWS_AS(validate_index_set(LevelComposition({1, 2, 1}), IndexSet({2})), InvalidIndexError);
}

TEST_CASE("moving particles and the cyclic shift") {
    CHECK(apply_index_set(LevelComposition({1, 1, 0}), IndexSet({0})) == LevelComposition({0, 2, 0}));
    CHECK(apply_index_set(LevelComposition({1, 1, 0}), IndexSet({0, 1})) == LevelComposition({0, 1, 1}));
    CHECK(apply_index_set(LevelComposition({2, 0}), IndexSet({0})) == LevelComposition({1, 1}));
    CHECK(cyclic_shift(LevelComposition({1, 2, 3})) == LevelComposition({3, 1, 2}));
    const LevelComposition K({2, 1, 1, 0});
    for (const auto& I : d_family(K).all()) {
        const auto KI = apply_index_set(K, I);
        CHECK(KI.level() == K.level());
        for (int j = 0; j < K.rank(); ++j)
            CHECK(KI.partial_sum(j) == K.partial_sum(j) - (I.contains(j) ? 1 : 0));
    }
}

TEST_CASE("region membership matches the moved composition and the oracle") {
    for (const auto& parts : std::vector<std::vector<int>>{{1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {2, 1}, {1, 2, 0, 1}}) {
        const LevelComposition K(parts);
        const int rank = K.rank();
        for (const auto& cfg : enumerate_all_configurations(rank, rank == 1 ? 6 : 4)) {
            if (!satisfies_difference(cfg, rank, K.level())) continue;
            const oracle::Entries e(cfg.entries().begin(), cfg.entries().end());
            for (const auto& I : d_family(K).all()) {
                std::vector<int> minus(rank, 0);
                for (int i : I.elements()) minus[i] = 1;
                const bool expected = oracle::admissible(e, parts, minus);
                CHECK(in_region(cfg, K, I) == expected);
                CHECK(in_region_via_composition(cfg, K, I) == expected);
            }
        }
    }
}

TEST_CASE("sharp regions agree with their definition") {
    const LevelComposition K({1, 1, 1});
    for (const auto& cfg : enumerate_all_configurations(2, 4))
        for (const auto& B : d_family(K).all())
            CHECK(in_sharp_region(cfg, K, B) == in_sharp_region_definitional(cfg, K, B));
}

TEST_CASE("position signs") {
    CHECK(position_sign(IndexSet({1}), 0) == 1);
    CHECK(position_sign(IndexSet({0}), 1) == -1);
    CHECK(position_sign(IndexSet{}, 3) == 1);
    CHECK(position_sign(IndexSet({0, 2}), 1) == -1);
    CHECK(position_sign(IndexSet({0, 1}), 2) == 1);
}
