#include <doctest.h>

#include <set>

#include "fsrec/combinatorics.hpp"
#include "fsrec/errors.hpp"
#include "oracles.hpp"

using namespace fsrec;

namespace {

std::set<oracle::Entries> as_set(const std::vector<Configuration>& cfgs) {
    std::set<oracle::Entries> out;
    for (const auto& c : cfgs) out.insert(oracle::Entries(c.entries().begin(), c.entries().end()));
    return out;
}

} // namespace

TEST_CASE("degree and weight") {
    CHECK(degree(Configuration({1, 0, 2}), 2) == 5);
    CHECK(degree(Configuration({0, 1, 0, 1}), 1) == 6);
    CHECK(degree(Configuration{}, 3) == 0);
    CHECK(weight(Configuration({1, 0, 2}), 2) == WeightVector({3, 0}));
    CHECK(weight(Configuration({0, 1, 0, 1}), 2) == WeightVector({0, 2}));
    CHECK(color_of_position(4, 3) == 2);
    CHECK(degree_of_position(4, 3) == 2);
}

TEST_CASE("configurations drop trailing zeros and reject negatives") {
    CHECK(Configuration({1, 0, 0}) == Configuration({1}));
    CHECK(Configuration({0, 0}).empty());
    CHECK_THROWS_AS(Configuration({1, -1}), InvalidArgumentError);
    CHECK_THROWS_AS(LevelComposition({1}), InvalidArgumentError);
    CHECK_THROWS_AS(LevelComposition({1, -2}), InvalidArgumentError);
}

TEST_CASE("admissibility conditions") {
    const LevelComposition K({1, 0});
    CHECK(is_admissible(Configuration({1, 0, 1}), K));
    CHECK_FALSE(is_admissible(Configuration({1, 1}), K));
    CHECK_FALSE(is_admissible(Configuration({2}), LevelComposition({1, 1})));
    CHECK(is_admissible(Configuration({0, 2}), LevelComposition({0, 2})));
    CHECK_FALSE(is_admissible(Configuration({1}), LevelComposition({0, 1})));
    CHECK(satisfies_difference(Configuration({1, 0, 1, 0, 1}), 1, 1));
    CHECK_FALSE(satisfies_difference(Configuration({1, 1, 1}), 2, 2));
}

TEST_CASE("small enumerations in canonical order") {
    const auto a = enumerate_admissible(LevelComposition({1, 0}), 4);
    const std::vector<Configuration> expected{Configuration{},          Configuration({1}),
                                              Configuration({0, 1}),    Configuration({0, 0, 1}),
                                              Configuration({0, 0, 0, 1}), Configuration({1, 0, 1})};
    CHECK(a == expected);
    CHECK(enumerate_admissible(LevelComposition({0, 1}), 2) ==
          std::vector<Configuration>{Configuration{}, Configuration({0, 1})});
}

TEST_CASE("enumeration agrees with the odometer oracle") {
    for (const auto& parts : std::vector<std::vector<int>>{
             {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {1, 2}, {1, 0, 0}, {0, 1, 1}, {2, 0, 1}, {0, 0, 2}}) {
        const LevelComposition K(parts);
        const int D = K.rank() == 1 ? 7 : 4;
        CAPTURE(K.to_string());
        CHECK(as_set(enumerate_admissible(K, D)) == oracle::admissible_by_odometer(parts, D));
    }
}

TEST_CASE("unconstrained configurations count colored partitions") {
    for (int rank = 1; rank <= 3; ++rank) {
        const int D = 6;
        const auto counts = oracle::colored_partition_counts(rank, D);
        std::vector<std::int64_t> seen(D + 1, 0);
        for (const auto& c : enumerate_all_configurations(rank, D)) ++seen[degree(c, rank)];
        CHECK(seen == counts);
    }
}

TEST_CASE("grades partition the enumeration") {
    const LevelComposition K({1, 1, 0});
    std::size_t total = 0;
    for (const auto& [g, cfgs] : enumerate_by_grade(K, 5)) {
        for (const auto& c : cfgs) {
            CHECK(degree(c, 2) == g.degree);
            CHECK(weight(c, 2) == g.weight);
        }
        total += cfgs.size();
    }
    CHECK(total == enumerate_admissible(K, 5).size());
}

TEST_CASE("output cap raises a resource error") {
    CHECK_THROWS_AS(enumerate_admissible(LevelComposition({2, 1}), 10, EnumerationLimits{5}), ResourceLimitError);
}
