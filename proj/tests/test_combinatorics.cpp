#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "katalan/combinatorics.hpp"

using namespace katalan;

TEST_CASE("extended membership") {
    CHECK(is_extended_member({3, 1, 2}, 3));   // 5 >= 2 >= 2
    CHECK(!is_extended_member({1, 3, 0}, 3));  // 1+2 < 3+1
    CHECK(!is_extended_member({4, 1, 1}, 3));  // entry above k
    CHECK(is_extended_member({}, 1));

    // every bounded partition with k >= largest part is a member
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int ell = 1 + static_cast<int>(rng() % 5);
        Vec v(ell);
        int prev = 4;
        for (int i = 0; i < ell; ++i) prev = v[i] = static_cast<int>(rng() % (prev + 1));
        int k = v[0] + static_cast<int>(rng() % 3);
        CHECK(is_bounded_partition(v, k));
        CHECK(is_extended_member(v, k));
    }
}

TEST_CASE("epsilon shifts") {
    CHECK(add_epsilon({3, 2, 1, 3}, 2, -1) == Vec{3, 1, 1, 3});
    CHECK(add_epsilon_interval({3, 2, 1, 3}, 2, 3, -1) == Vec{3, 1, 0, 3});
    CHECK_THROWS_AS(add_epsilon({1, 2}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_epsilon_interval({1, 2}, 2, 1, 1), std::invalid_argument);

    // inverse and commutativity of the shift action
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int ell = 1 + static_cast<int>(rng() % 6);
        Vec v(ell);
        for (int& x : v) x = static_cast<int>(rng() % 9) - 3;
        int a = 1 + static_cast<int>(rng() % ell);
        int b = 1 + static_cast<int>(rng() % ell);
        CHECK(add_epsilon(add_epsilon(v, a, 1), a, -1) == v);
        CHECK(add_epsilon(add_epsilon(v, a, 1), b, -1) == add_epsilon(add_epsilon(v, b, -1), a, 1));
    }
}

TEST_CASE("multiset operations") {
    IndexMultiset m = IndexMultiset::from_elements(4, {2, 3, 4, 4});
    CHECK(m.count(4) == 2);
    CHECK(m.count(1) == 0);
    CHECK(m.size() == 4);
    CHECK(m.without(4) == IndexMultiset::from_elements(4, {2, 3, 4}));
    CHECK_THROWS_AS(m.without(1), std::invalid_argument);
    CHECK(IndexMultiset::power(8, 8, 0) == IndexMultiset(8));
    CHECK(IndexMultiset::power(8, 3, 2) == IndexMultiset::from_elements(8, {3, 3}));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int ell = 1 + static_cast<int>(rng() % 6);
        IndexMultiset s(ell);
        for (int a = 1; a <= ell; ++a) s.add(a, static_cast<int>(rng() % 3));
        int x = 1 + static_cast<int>(rng() % ell);
        CHECK(s.with(x).without(x) == s);
    }
}

TEST_CASE("partition predicates and padding") {
    CHECK(is_partition_vec({3, 1, 0, 0}));
    CHECK(!is_partition_vec({1, 2}));
    CHECK(!is_partition_vec({1, -1}));
    CHECK(is_bounded_partition({2, 2, 0}, 2));
    CHECK(!is_bounded_partition({3, 2}, 2));
    CHECK(strip_trailing_zeros({2, 1, 0, 0}) == Vec{2, 1});
    CHECK(pad_to({2, 1}, 4) == Vec{2, 1, 0, 0});
    CHECK(vec_degree({5, 4, 4, 3, 3, 2, 2, 2, 2, 1}) == 28);
}

TEST_CASE("checked arithmetic and binomials") {
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(0, 1) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(39, 30) == 211915132);
    CHECK_THROWS_AS(checked_mul(1'000'000'000'000'000'000LL, 100), std::overflow_error);
}
