#include <doctest.h>

#include <gordon/partitions.hpp>
#include <gordon/qseries.hpp>

#include <vector>

using namespace gordon;
using namespace gordon::partitions;

using Table = std::vector<std::uint64_t>;

TEST_CASE("rogers-ramanujan counts")
{
    // parts differing by at least 2
    CHECK(count_table(Family::B, {2, 2}, 10) == Table{1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6});
    CHECK(count_table(Family::A, {2, 2}, 10) == Table{1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6});
    // ... and no 1s
    CHECK(count_table(Family::B, {2, 1}, 10) == Table{1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4});
    CHECK(count_table(Family::A, {2, 1}, 10) == Table{1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4});
}

TEST_CASE("k = 1 allows only the empty partition")
{
    CHECK(count_table(Family::B, {1, 1}, 6) == Table{1, 0, 0, 0, 0, 0, 0});
    CHECK(count_A(5, {1, 1}) == 0);
}

TEST_CASE("predicates")
{
    const auto p = Partition::from_parts({3, 2, 1});
    CHECK(p.weight() == 6);
    CHECK(p.largest_part() == 3);
    CHECK(p.str() == "(3^1,2^1,1^1)");
    CHECK_FALSE(is_gordon_admissible(p, {2, 2}));
    CHECK(is_gordon_admissible(p, {3, 2}));
    CHECK_FALSE(is_gordon_admissible(p, {3, 1}));

    const auto q = Partition::from_parts({4, 4, 3, 3, 1});
    CHECK(even_parts_even(q));
    CHECK_FALSE(odd_parts_even(q));
    CHECK(in_family(q, Family::W, {5, 2}));
    CHECK_FALSE(in_family(q, Family::Wbar, {5, 2}));
    CHECK_FALSE(in_family(q, Family::W, {4, 2}));

    CHECK(avoids_gordon_residues(Partition::from_parts({1, 4, 6}), {2, 2}));
    CHECK_FALSE(avoids_gordon_residues(Partition::from_parts({3}), {2, 2}));
    CHECK_FALSE(avoids_gordon_residues(Partition::from_parts({5}), {2, 2}));
}

TEST_CASE("small parity counts")
{
    CHECK(count_table(Family::W, {3, 1}, 8) == count_table_naive(Family::W, {3, 1}, 8));
    CHECK(count_W(4, {3, 1}) == 1);    // (2,2)
    CHECK(count_Wbar(4, {3, 2}) == 2); // (4), (2,2)
}

TEST_CASE("pruned generator matches brute force")
{
    for (int k = 1; k <= 4; ++k) {
        for (int a = 1; a <= k; ++a) {
            for (const Family f : {Family::A, Family::B, Family::W, Family::Wbar}) {
                CHECK(count_table(f, {k, a}, 18) == count_table_naive(f, {k, a}, 18));
            }
        }
    }
}

TEST_CASE("partition enumeration")
{
    int count = 0;
    for_each_partition(7, [&](const Partition &p) {
        CHECK(p.weight() == 7);
        ++count;
    });
    CHECK(count == 15);
}

TEST_CASE("bad parameters")
{
    CHECK_THROWS_AS(count_B(3, {2, 3}), precondition_error);
    CHECK_THROWS_AS(count_B(3, {0, 1}), precondition_error);
    CHECK_THROWS_AS(family_from_string("C"), precondition_error);
    CHECK(family_from_string("Wbar") == Family::Wbar);
    CHECK(to_string(Family::W) == "W");
    CHECK_THROWS_AS(Partition::from_parts({0}), precondition_error);
}

TEST_CASE("single values")
{
    CHECK(count_B(4, {2, 2}) == 2); // 4, 3+1
    CHECK(count_A(4, {2, 2}) == 2); // 4, 1+1+1+1
    CHECK(count_B(1, {2, 1}) == 0);
    CHECK_FALSE(is_gordon_admissible(Partition::from_parts({1}), {2, 1}));
    CHECK(is_gordon_admissible(Partition::from_parts({4, 1}), {2, 2}));
    for (int k = 1; k <= 5; ++k) {
        for (int a = 1; a <= k; ++a) {
            CHECK(count_B(0, {k, a}) == 1);
            CHECK(count_A(0, {k, a}) == 1);
        }
    }
    CHECK(count_table(Family::A, {2, 2}, 30) == count_table(Family::B, {2, 2}, 30));
}
