#include "bgrank/enumerate.hpp"

#include <random>
#include <set>

#include "brute_force.hpp"
#include "doctest.h"

using namespace bgrank;

TEST_CASE("known counts") {
  CHECK(count(EnumSpec{5}) == 7);
  CHECK(count(EnumSpec{0}) == 1);
  CHECK(count(EnumSpec{.n = 10, .strict = true}) == 10);
  CHECK(count(EnumSpec{.n = 6, .max_part = 3, .max_len = 2}) == 1);
  CHECK(count_box(-1, 3, 3) == 0);
  CHECK(count_box(0, 0, 0) == 1);
  CHECK(count_box(4, 2, 2) == 1);
}

TEST_CASE("stream order, uniqueness and bounds") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    EnumSpec spec;
    spec.n = std::uniform_int_distribution<int>(0, 18)(rng);
    if (std::bernoulli_distribution(0.5)(rng))
      spec.max_part = std::uniform_int_distribution<int>(0, 8)(rng);
    if (std::bernoulli_distribution(0.5)(rng))
      spec.max_len = std::uniform_int_distribution<int>(0, 8)(rng);
    spec.strict = std::bernoulli_distribution(0.3)(rng);
    if (std::bernoulli_distribution(0.3)(rng))
      spec.rank = std::uniform_int_distribution<int>(-2, 2)(rng);

    std::set<std::vector<int>> expected;
    for (const auto& p : brute::partitions(spec.n)) {
      if (spec.max_part && !p.empty() && p.front() > *spec.max_part) continue;
      if (spec.max_len && static_cast<int>(p.size()) > *spec.max_len) continue;
      if (spec.strict && !brute::is_strict(p)) continue;
      if (spec.rank && brute::bg_rank(p) != *spec.rank) continue;
      expected.insert(p);
    }

    std::vector<std::vector<int>> seen;
    for (const auto& p : enumerate(spec)) seen.emplace_back(p.parts().begin(), p.parts().end());
    for (std::size_t i = 1; i < seen.size(); ++i) REQUIRE(seen[i - 1] > seen[i]);
    REQUIRE(std::set<std::vector<int>>(seen.begin(), seen.end()) == expected);
    REQUIRE(count(spec) == static_cast<long long>(expected.size()));
  }
}

TEST_CASE("the stream restarts") {
  const auto stream = enumerate(EnumSpec{.n = 7});
  long long first = 0;
  long long second = 0;
  for (const auto& p : stream) first += p.size();
  for (const auto& p : stream) second += p.size();
  CHECK(first == 7 * 15);
  CHECK(second == first);
}

TEST_CASE("bounded strict counts") {
  for (int N = 0; N <= 3; ++N)
    for (int nu = 0; nu <= 1; ++nu)
      for (int k = -3; k <= 4; ++k)
        for (int n = 0; n <= 20; ++n) {
          long long c = 0;
          for (const auto& p : brute::strict_subsets(2 * N + nu))
            if (brute::sum(p) == n && brute::bg_rank(p) == k) ++c;
          REQUIRE(count_strict_bounded(n, k, N, nu) == c);
        }
  for (int n = 0; n <= 14; ++n)
    for (int L = 0; L <= 5; ++L)
      for (int M = 0; M <= 5; ++M) REQUIRE(count_box(n, L, M) == brute::box_count(n, M, L));
}
