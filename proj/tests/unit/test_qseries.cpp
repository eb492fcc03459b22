#include <doctest.h>

#include <limits>

#include "fsrec/errors.hpp"
#include "fsrec/qseries.hpp"

using namespace fsrec;

TEST_CASE("truncated arithmetic") {
    const QPolynomial one_plus_q(2, {1, 1});
    const QPolynomial one_minus_q(2, {1, -1});
    CHECK(one_plus_q * one_minus_q == QPolynomial(2, {1, 0, -1}));
    CHECK(QPolynomial(2, {0, 1, 1}) * QPolynomial::monomial(2, 1) == QPolynomial::monomial(2, 2));
    CHECK((QPolynomial(3, {1, 2}) + QPolynomial(2, {0, 1, 1, 9})).truncation_order() == 2);
    CHECK((QPolynomial(3, {1, 2}) - QPolynomial(3, {1, 2})).is_zero());
    CHECK(QPolynomial(4, {0, 0, 3}).valuation() == 2);
    CHECK(QPolynomial(4).valuation() == 5);
    CHECK(QPolynomial(4, {1, 1}).shifted(4) == QPolynomial::monomial(4, 4));
    CHECK(QPolynomial(3, {1})[7] == 0);
}

TEST_CASE("geometric factor") {
    CHECK(geometric_factor(1, 3) == QPolynomial(3, {0, 1, 1, 1}));
    CHECK(geometric_factor(3, 5) == QPolynomial::monomial(5, 3));
    CHECK(geometric_factor(2, 6) == QPolynomial(6, {0, 0, 1, 0, 1, 0, 1}));
    for (int n = 1; n <= 7; ++n) {
        const int M = 12;
        CHECK((QPolynomial::constant(M, 1) - QPolynomial::monomial(M, n)) * geometric_factor(n, M) ==
              QPolynomial::monomial(M, n));
    }
    CHECK_THROWS_AS(geometric_factor(0, 3), DomainError);
}

TEST_CASE("overflow is an error, not a wraparound") {
    const auto big = QPolynomial::constant(1, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + QPolynomial::constant(1, 1), OverflowError);
    CHECK_THROWS_AS(big * QPolynomial::constant(1, 2), OverflowError);
}

TEST_CASE("characters store only nonzero entries") {
    Character ch(LevelComposition({1, 0}), 5);
    ch.set(WeightVector({1}), QPolynomial(5));
    CHECK(ch.table().empty());
    ch.add_count(WeightVector({1}), 3);
    ch.add_count(WeightVector({1}), 3);
    CHECK(ch.at(WeightVector({1})) == QPolynomial::monomial(5, 3, 2));
    CHECK(ch.at(WeightVector({4})).is_zero());
    CHECK_THROWS(ch.set(WeightVector({-1}), QPolynomial::constant(5, 1)));
}

TEST_CASE("shift substitution") {
    Character ch(LevelComposition({0, 1}), 6);
    ch.set(WeightVector({0}), QPolynomial::constant(6, 1));
    const auto shifted = shift_substitute(ch, LevelComposition({1, 0}));
    CHECK(shifted.at(WeightVector({1})) == QPolynomial::monomial(6, 1));
    CHECK(shifted.at(WeightVector({0})).is_zero());

    Character two(LevelComposition({1, 1}), 6);
    two.set(WeightVector({2}), QPolynomial(6, {0, 0, 1, 1}));
    const auto same = shift_substitute(two, LevelComposition({0, 2}));
    CHECK(same.at(WeightVector({2})) == QPolynomial(6, {0, 0, 0, 0, 1, 1}));
    for (const auto& [n, poly] : same.table()) CHECK(poly.valuation() >= n.total());
}
