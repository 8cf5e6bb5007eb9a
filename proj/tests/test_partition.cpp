#include "bgrank/partition.hpp"

#include "bgrank/error.hpp"
#include "brute_force.hpp"
#include "doctest.h"

using namespace bgrank;

TEST_CASE("construction validates instead of normalizing") {
  CHECK_NOTHROW(Partition({5, 5, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({3, 0}), Error);
  CHECK_THROWS_AS(StrictPartition({5, 5, 1}), Error);

  const Partition empty;
  CHECK(empty.size() == 0);
  CHECK(empty.length() == 0);
  CHECK(empty.largest() == 0);

  const Partition p({10, 7, 4, 2});
  CHECK(p.size() == 23);
  CHECK(p.length() == 4);
  CHECK(p.largest() == 10);
  CHECK(p.part(1) == 10);
  CHECK(p.part(5) == 0);
}

TEST_CASE("bg_rank") {
  CHECK(bg_rank(Partition({10, 7, 4, 2})) == -1);
  CHECK(bg_rank(Partition()) == 0);
  CHECK(bg_rank(Partition({9, 7, 5, 4, 1})) == 2);
  CHECK(bg_rank(Partition({12, 11, 6, 4, 2})) == -1);
  CHECK(bg_rank(Partition({11, 8, 6, 5, 4, 3, 2, 1})) == -2);
}

TEST_CASE("bg_rank_residue") {
  const auto rr = bg_rank_residue(Partition({10, 7, 4, 2}));
  CHECK(rr.counts == ResidueCount{11, 12});
  CHECK(rr.rank == -1);

  const auto zero = bg_rank_residue(Partition());
  CHECK(zero.counts == ResidueCount{0, 0});
  CHECK(zero.rank == 0);

  CHECK(bg_rank_residue(Partition({12, 11, 6, 4, 2})).rank == -1);
}

TEST_CASE("both BG-rank formulations agree on every partition of n <= 25") {
  for (int n = 0; n <= 25; ++n) {
    for (const auto& parts : brute::partitions(n)) {
      const Partition p(parts);
      const auto rr = bg_rank_residue(p);
      REQUIRE(rr.rank == bg_rank(p));
      REQUIRE(rr.counts.r0 + rr.counts.r1 == p.size());
      REQUIRE(bg_rank(p) == brute::bg_rank(parts));
    }
  }
}

TEST_CASE("characteristic is the negated rank") {
  CHECK(characteristic(Partition({10, 7, 4, 2})) == 1);
  CHECK(characteristic(Partition()) == 0);
  CHECK(characteristic(Partition({9, 7, 5, 4, 1})) == -2);
}

TEST_CASE("conjugate") {
  // Expected value from transposing the cell set.
  const brute::Parts expected = brute::transpose({6, 3, 1});
  REQUIRE(expected == brute::Parts{3, 2, 2, 1, 1, 1});
  CHECK(conjugate(Partition({6, 3, 1})) == Partition(expected));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({1, 1, 1})) == Partition({3}));

  for (int n = 0; n <= 16; ++n)
    for (const auto& parts : brute::partitions(n)) {
      const Partition p(parts);
      REQUIRE(conjugate(p) == Partition(brute::transpose(parts)));
      REQUIRE(conjugate(conjugate(p)) == p);
    }
}

TEST_CASE("shifted_column_profile") {
  CHECK(shifted_column_profile(StrictPartition({8, 5, 2, 1})) ==
        std::vector<int>{1, 2, 3, 4, 2, 2, 1, 1});
  CHECK(shifted_column_profile(StrictPartition({9, 7, 5, 4, 1})) ==
        std::vector<int>{1, 2, 3, 4, 5, 4, 4, 2, 1});
  CHECK(shifted_column_profile(StrictPartition({1})) == std::vector<int>{1});
  CHECK(shifted_column_profile(StrictPartition()).empty());
}

TEST_CASE("profiles rise 1..r, then never rise, and sum to the size") {
  for (const auto& parts : brute::strict_subsets(12)) {
    const StrictPartition d(parts);
    const auto c = shifted_column_profile(d);
    int total = 0;
    for (int v : c) total += v;
    REQUIRE(total == d.size());
    for (int i = 1; i <= d.length(); ++i) REQUIRE(c[static_cast<std::size_t>(i - 1)] == i);
    for (std::size_t i = static_cast<std::size_t>(d.length()); i + 1 < c.size(); ++i)
      REQUIRE(c[i + 1] <= c[i]);
  }
}

TEST_CASE("text format") {
  CHECK(parse_int_list("9,7,5,4,1") == std::vector<int>{9, 7, 5, 4, 1});
  CHECK(parse_int_list("").empty());
  CHECK(parse_int_list(" 3, 2 ") == std::vector<int>{3, 2});
  CHECK(parse_int_list("(3,2)") == std::vector<int>{3, 2});
  CHECK(format_int_list(std::vector<int>{6, 3, 1}) == "6,3,1");
  CHECK(to_string(Partition()) == "");

  CHECK_THROWS_AS(parse_int_list("3,,1"), Error);
  CHECK_THROWS_AS(parse_int_list("a"), Error);
  CHECK_THROWS_AS(parse_int_list("3,"), Error);
  try {
    parse_partition("1,2");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPartition);
  }
  try {
    parse_strict_partition("2,2");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStrict);
  }
}
