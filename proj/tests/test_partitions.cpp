#include <doctest.h>

#include <set>

#include "equigrass/partitions.hpp"
#include "oracles.hpp"

using namespace equigrass;

TEST_CASE("partitions keep exactly k parts in ascending order")
{
    Partition p({3, 0, 1});
    CHECK(p.parts == std::vector<int>{0, 1, 3});
    CHECK(p.sum() == 4);
    CHECK(p.odd_count() == 2);
    CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
}

TEST_CASE("weight counts a's and b's")
{
    // part 2r contributes r, part 2r+1 contributes r+1
    CHECK(weight(Partition({0, 1, 3})) == 3);
    CHECK(weight(Partition({2, 2})) == 2);
    CHECK(weight(Partition({5})) == 3);
}

TEST_CASE("prt agrees with brute-force counting")
{
    for (int k = 1; k <= 5; ++k)
        for (int n = 0; n <= 22; ++n)
            for (int j = 0; j <= k; ++j) {
                auto want = oracle::prt(n, k, j);
                CHECK(count_prt(n, k, j) == want);
                CHECK(count_prt_dp(n, k, j) == want);
                if (n <= 16) CHECK(count_prt_enumerate(n, k, j) == want);
            }
}

TEST_CASE("prt values in reference chart cells")
{
    CHECK(count_prt(12, 5, 2) == 25);
    CHECK(count_prt(11, 5, 1) == 18);
    CHECK(count_prt(14, 4, 2) == 30);
    CHECK(count_prt(4, 2, 0) == 2);
    CHECK(count_prt(4, 2, 2) == 1);
}

TEST_CASE("prt rejects parity-inconsistent requests")
{
    CHECK(count_prt(5, 3, 0) == 0);
    CHECK(count_prt(4, 3, 1) == 0);
    CHECK(count_prt(3, 2, 3) == 0);
}

TEST_CASE("enumeration is complete, sorted and duplicate free")
{
    auto ps = enumerate_partitions(8, 3);
    CHECK(ps.size() == 10);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
    for (const auto& p : ps) CHECK(p.sum() == 8);
}

TEST_CASE("successors add two to one part")
{
    auto s = successors(Partition({0, 1, 1}));
    std::set<Partition> got(s.begin(), s.end());
    CHECK(got == std::set<Partition>{Partition({2, 1, 1}), Partition({0, 1, 3})});
}

TEST_CASE("minimal root strips every part down to 0 or 1")
{
    CHECK(minimal_root(Partition({2, 5, 4})) == Partition({0, 0, 1}));
    CHECK(minimal_root(Partition({3, 3})) == Partition({1, 1}));
}

TEST_CASE("odd-minus even-plus duality is an involution with the expected shift")
{
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : enumerate_partitions(n, 4)) {
            auto q = duality_bijection(p);
            CHECK(q.sum() == n + 4 - 2 * p.odd_count());
            CHECK(q.odd_count() == 4 - p.odd_count());
            CHECK(duality_bijection(q) == p);
        }
}

TEST_CASE("parsing and rendering")
{
    CHECK(parse_partition("[0,1,3]") == Partition({0, 1, 3}));
    CHECK(parse_partition("0,1,3") == Partition({0, 1, 3}));
    CHECK(parse_partition("013") == Partition({0, 1, 3}));
    CHECK(parse_partition("[10, 2]") == Partition({2, 10}));
    CHECK(parse_partition("[12]") == Partition({12}));
    CHECK_THROWS_AS(parse_partition("[1;2]"), std::invalid_argument);
    CHECK(to_string(Partition({3, 0, 1})) == "[0,1,3]");
    CHECK(orbit_string(Partition({0, 1, 3})) == "[a1 a2 b1]");
    CHECK(orbit_string(Partition({1, 2})) == "[a1 b2]");
    CHECK(orbit_string(Partition({0, 0})) == "[1]");
}
