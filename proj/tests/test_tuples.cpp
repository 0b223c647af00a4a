#include "fss/tuples.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace fss;

TEST_CASE("tuple statistics")
{
    CHECK(tuple_stats({1, 1, 1}) == TupleStats{3, {1, 2, 3}, {1, 2, 3}, 3});
    CHECK(tuple_stats({0, 1, 2}) == TupleStats{3, {2, 3}, {2}, 1});
    CHECK(tuple_stats({2, 0, 4}) == TupleStats{6, {1, 3}, {}, 0});
}

TEST_CASE("tuple validation")
{
    CHECK_THROWS_AS(EdgeTuple(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeTuple({1, -1}), std::invalid_argument);
    CHECK(EdgeTuple::zero(3) == EdgeTuple{0, 0, 0});
    CHECK(EdgeTuple({2, 0, 3}).str() == "(2,0,3)");
}

TEST_CASE("statistic inequalities hold for small tuples")
{
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j <= 7; ++j)
            for (const auto& t : enumerate_tuples(n, j)) {
                const auto s = tuple_stats(t);
                CHECK(s.norm2 <= static_cast<int>(s.support.size()));
                CHECK(static_cast<int>(s.support.size()) <= std::min(n, s.norm));
                CHECK((s.norm2 - s.norm) % 2 == 0);
            }
}

TEST_CASE("lower and raise neighbours")
{
    CHECK(lower_neighbor({2, 1}, 1) == EdgeTuple{1, 1});
    CHECK(lower_neighbor({0, 2, 2}, 3) == EdgeTuple{0, 2, 1});
    CHECK_THROWS_AS(lower_neighbor({1, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(lower_neighbor({1, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(lower_neighbor({1, 0}, 0), std::invalid_argument);

    CHECK(raise_neighbor({1, 0}, 2) == EdgeTuple{1, 1});
    CHECK(raise_neighbor(lower_neighbor({2, 1}, 1), 1) == EdgeTuple{2, 1});
    CHECK(raise_neighbor({0, 1, 2}, 3) == EdgeTuple{0, 1, 3});
    CHECK_THROWS_AS(raise_neighbor({0, 1}, 3), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and complete")
{
    CHECK(enumerate_tuples(2, 2) == std::vector<EdgeTuple>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(enumerate_tuples(3, 0) == std::vector<EdgeTuple>{{0, 0, 0}});
    CHECK(enumerate_tuples(4, 3).size() == 20);

    for (int n = 1; n <= 5; ++n)
        for (int j = 0; j <= 6; ++j) {
            const auto all = enumerate_tuples(n, j);
            long brute = 0;
            oracle::for_each_composition(n, j, [&](const std::vector<int>&) { ++brute; });
            CHECK(static_cast<long>(all.size()) == brute);
            CHECK(Integer(brute) == binomial(n + j - 1, n - 1));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::set<EdgeTuple>(all.begin(), all.end()).size() == all.size());
            for (const auto& t : all) CHECK(t.norm() == j);
        }
}

TEST_CASE("signed binomial values")
{
    CHECK(signed_binomial(4, 2) == 2);
    CHECK(signed_binomial(2, 1) == 0);
    CHECK(signed_binomial(9, 4) == 6);
    CHECK_THROWS_AS(signed_binomial(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(signed_binomial(3, -1), std::invalid_argument);
}

TEST_CASE("signed binomial: recurrence, symmetry, vanishing to m = 64")
{
    for (int m = 0; m <= 64; ++m)
        for (int r = 0; r <= m; ++r) {
            CHECK(signed_binomial(m, r) == signed_binomial(m, m - r));
            CHECK((signed_binomial(m, r) == 0) == ((r % 2 == 1) && ((m - r) % 2 == 1)));
            if (r >= 1 && r <= m - 1) {
                const Integer rhs = signed_binomial(m - 1, r - 1) + (r % 2 ? -1 : 1) * signed_binomial(m - 1, r);
                CHECK(signed_binomial(m, r) == rhs);
            }
        }
}

TEST_CASE("signed binomial equals the signed shuffle count")
{
    for (int m = 0; m <= 10; ++m)
        for (int r = 0; r <= m; ++r) CHECK(signed_binomial(m, r) == oracle::shuffle_count(m, r));
}
