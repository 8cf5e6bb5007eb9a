#include "bgrank/composed.hpp"

#include <map>
#include <random>
#include <set>

#include "bgrank/enumerate.hpp"
#include "bgrank/error.hpp"
#include "brute_force.hpp"
#include "doctest.h"

using namespace bgrank;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

struct Fixture {
  std::vector<int> d;
  ParameterBox box;
  long long t;
  std::vector<int> raw_image;
};

const std::vector<Fixture> kFixtures = {
    {{9, 7, 5, 4, 1}, {4, 1, 2}, 6, {6, 3, 1}},
    {{12, 11, 6, 4, 2}, {6, 0, -1}, 3, {5, 4, 3, 2, 2}},
    {{11, 8, 6, 5, 4, 3, 2, 1}, {5, 1, -2}, 10, {8, 7}},
    {{11, 8, 7, 4, 3, 1}, {6, 1, 2}, 6, {5, 5, 3, 1}},
};

}  // namespace

TEST_CASE("rank and triangular helpers") {
  CHECK(a_from_k(0) == 0);
  CHECK(a_from_k(-2) == 4);
  CHECK(a_from_k(2) == 3);
  CHECK(k_from_triangular(0) == 0);
  CHECK(k_from_triangular(1) == 1);
  CHECK(k_from_triangular(3) == -1);
  CHECK(k_from_triangular(6) == 2);
  CHECK(k_from_triangular(10) == -2);
  CHECK(kind_of([] { k_from_triangular(2); }) == ErrorKind::NotRepresentable);
  CHECK(triangular_root(10) == 4);
  CHECK(!triangular_root(11).has_value());

  for (int k = -20; k <= 20; ++k) {
    const long long t = 2LL * k * k - k;
    REQUIRE(k_from_triangular(t) == k);
    const int m = a_from_k(k);
    REQUIRE(static_cast<long long>(m) * (m + 1) / 2 == t);
  }
}

TEST_CASE("iota on the fixtures") {
  const auto img = iota(StrictPartition({9, 7, 5, 4, 1}));
  CHECK(img.t == 6);
  CHECK(img.m == 3);
  CHECK(img.delta == ABSequence::validate({4, 5, 4, 4, 2, 1}));
  CHECK(img.kind == IotaCase::StaircaseMatch);

  const auto tiny = iota(StrictPartition({4, 1}));
  CHECK(tiny.kind == IotaCase::Descending);

  const auto empty = iota(StrictPartition());
  CHECK(empty.t == 0);
  CHECK(empty.kind == IotaCase::Empty);

  CHECK(iota_inverse(6, ABSequence::validate({4, 5, 4, 4, 2, 1})) ==
        StrictPartition({9, 7, 5, 4, 1}));
  CHECK(kind_of([] { iota_inverse(5, ABSequence()); }) == ErrorKind::NotTriangular);
}

TEST_CASE("iota is a bijection onto admissible pairs") {
  for (const auto& parts : brute::strict_subsets(13)) {
    const StrictPartition d(parts);
    const auto img = iota(d);
    REQUIRE(classify_iota_pair(img.m, img.delta) == img.kind);
    REQUIRE(iota_inverse(img.t, img.delta) == d);
    REQUIRE(img.t + img.delta.weight() == d.size());
  }
}

TEST_CASE("psi on the fixtures, both orientations") {
  for (const auto& f : kFixtures) {
    const StrictPartition d(f.d);
    const auto raw = psi_forward(d, f.box, {.conjugate = false});
    CHECK(raw.triangular == f.t);
    CHECK(raw.image == Partition(f.raw_image));
    CHECK(raw.k == f.box.k);
    CHECK(psi_inverse(f.t, raw.image, f.box, {.conjugate = false}) == d);

    const auto conj = psi_forward(d, f.box);
    CHECK(conj.conjugated == (f.box.k > 0));
    const Partition expected = f.box.k > 0 ? conjugate(Partition(f.raw_image)) : Partition(f.raw_image);
    CHECK(conj.image == expected);
    CHECK(psi_inverse(f.t, conj.image, f.box) == d);
    CHECK(psi_inverse_trace(f.t, Partition(f.raw_image)).result == d);
    CHECK(check_last_block_bound(d));
  }
}

TEST_CASE("psi failures") {
  const StrictPartition d({9, 7, 5, 4, 1});
  CHECK(kind_of([&] { psi_forward(d, ParameterBox{4, 1, 1}); }) == ErrorKind::RankMismatch);
  CHECK(kind_of([&] { psi_forward(d, ParameterBox{3, 1, 2}); }) ==
        ErrorKind::LargestPartExceedsBound);
  CHECK(kind_of([] { psi_inverse(5, Partition({1}), ParameterBox{4, 1, 2}); }) ==
        ErrorKind::ParameterMismatch);
}

TEST_CASE("parameter recovery") {
  // Un-conjugated images: L and M taken from the fixtures' boxes.
  const auto pos = recover_parameters(6, 6, 3);
  CHECK(pos.k == 2);
  CHECK(pos.N == 4);
  CHECK(pos.nu == 1);
  CHECK(pos.orientation == Orientation::Positive);

  const auto neg = recover_parameters(3, 7, 5);
  CHECK(neg.k == -1);
  CHECK(neg.N == 6);
  CHECK(neg.nu == 0);
  CHECK(neg.orientation == Orientation::NonPositive);

  CHECK(kind_of([] { recover_parameters(2, 6, 3); }) != ErrorKind::Parse);
}

TEST_CASE("minimal box is admissible and tight") {
  for (const auto& parts : brute::strict_subsets(10)) {
    const StrictPartition d(parts);
    const auto box = minimal_box(d);
    REQUIRE(box.admissible());
    REQUIRE(box.max_part() >= d.largest());
    REQUIRE(box.k == bg_rank(d));
  }
}

TEST_CASE("psi is a bijection onto the box for every small parameter set") {
  for (int N = 0; N <= 4; ++N)
    for (int nu = 0; nu <= 1; ++nu)
      for (int k = -N; k <= N + nu; ++k) {
        const ParameterBox box{N, nu, k};
        const long long t = 2LL * k * k - k;
        const auto bounds = box.image_bounds(true);
        std::map<long long, long long> by_size;
        std::set<std::vector<int>> images;
        for (const auto& parts : brute::strict_subsets(box.max_part())) {
          if (brute::bg_rank(parts) != k) continue;
          const StrictPartition d(parts);
          const auto mapped = psi_forward(d, box);
          REQUIRE(mapped.image.largest() <= bounds.largest);
          REQUIRE(mapped.image.length() <= bounds.length);
          REQUIRE(t + 2 * mapped.image.size() == d.size());
          REQUIRE(images.insert(std::vector<int>(mapped.image.parts().begin(), mapped.image.parts().end())).second);
          REQUIRE(psi_inverse(t, mapped.image, box) == d);
          ++by_size[mapped.image.size()];
        }
        // Every box partition is hit: counts match the box enumeration.
        for (int j = 0; j <= bounds.largest * bounds.length; ++j)
          REQUIRE(by_size[j] == brute::box_count(j, bounds.length, bounds.largest));
      }
}

TEST_CASE("random strict partitions round-trip through the minimal box") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> parts;
    for (int v = 24; v >= 1; --v)
      if (std::bernoulli_distribution(0.3)(rng)) parts.push_back(v);
    const StrictPartition d(parts);
    for (bool conj : {true, false}) {
      const auto box = minimal_box(d);
      const auto mapped = psi_forward(d, box, {.conjugate = conj});
      REQUIRE(psi_inverse(mapped.triangular, mapped.image, box, {.conjugate = conj}) == d);
    }
  }
}
