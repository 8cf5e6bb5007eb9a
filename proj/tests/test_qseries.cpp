#include "bgrank/qseries.hpp"

#include <random>

#include "brute_force.hpp"
#include "doctest.h"

using namespace bgrank;

namespace {

QPolynomial poly(std::vector<int> c, std::optional<int> trunc = std::nullopt) {
  std::vector<BigInt> big(c.begin(), c.end());
  return QPolynomial(std::move(big), trunc);
}

BigInt binom(int m, int n) {
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) r = r * (m - n + i) / i;
  return r;
}

QPolynomial random_poly(std::mt19937& rng, int max_deg) {
  std::vector<int> c(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, max_deg)(rng)));
  for (auto& v : c) v = std::uniform_int_distribution<int>(-5, 5)(rng);
  return poly(c);
}

}  // namespace

TEST_CASE("basic arithmetic and formatting") {
  const auto p = poly({1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(QPolynomial().degree() == -1);
  CHECK(poly({0, 0}).is_zero());
  CHECK((p * p) == poly({1, 0, 2, 0, 1}));
  CHECK((p + QPolynomial::monomial(1, 3)) == poly({1, 3, 1}));
  CHECK(p.shifted(2) == poly({0, 0, 1, 0, 1}));
  CHECK(poly({1, 0, 1, 0, 2}).to_string() == "1 + q^2 + 2*q^4");
  CHECK(poly({1, 0, 1}, 40).to_string() == "1 + q^2 + O(q^41)");
  CHECK(QPolynomial().to_string() == "0");
  CHECK(poly({1, 1, 1}).truncated(1) == poly({1, 1}, 1));
}

TEST_CASE("truncation propagates") {
  const auto a = poly({1, 1}, 3);
  const auto b = poly({1, 0, 0, 0, 0, 7});
  CHECK((a * b).truncation() == 3);
  CHECK((a + b).truncation() == 3);
  CHECK((a + b).coeff(5) == 0);
  CHECK(first_mismatch(poly({1, 2, 3}, 1), poly({1, 2, 9})) == std::nullopt);
  CHECK(first_mismatch(poly({1, 2, 3}), poly({1, 2, 9})) == 2);
}

TEST_CASE("json form") {
  const auto j = poly({1, 0, 2}, 5).to_json();
  CHECK(j["coeffs"] == nlohmann::json::array({"1", "0", "2"}));
  CHECK(j["truncation"] == 5);
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(gaussian_binomial(3, 0) == QPolynomial::one());
  CHECK(gaussian_binomial(3, 4).is_zero());
  CHECK(gaussian_binomial(3, -1).is_zero());
}

TEST_CASE("gaussian binomial properties") {
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= m; ++n) {
      const auto g = gaussian_binomial(m, n);
      REQUIRE(g.degree() == n * (m - n));
      BigInt at_one = 0;
      for (int e = 0; e <= g.degree(); ++e) {
        REQUIRE(g.coeff(e) >= 0);
        REQUIRE(g.coeff(e) == g.coeff(g.degree() - e));
        REQUIRE(g.coeff(e) == brute::box_count(e, n, m - n));
        at_one += g.coeff(e);
      }
      REQUIRE(at_one == binom(m, n));
    }
}

TEST_CASE("large gaussian coefficients stay exact") {
  const auto g = gaussian_binomial(80, 40);
  BigInt total = 0;
  for (const auto& c : g.coeffs()) total += c;
  CHECK(total == binom(80, 40));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 8);
    const auto b = random_poly(rng, 8);
    const auto c = random_poly(rng, 8);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    const int d = std::uniform_int_distribution<int>(0, 10)(rng);
    REQUIRE((a * b).truncated(d) == (a.truncated(d) * b.truncated(d)));
  }
}

TEST_CASE("products and substitutions") {
  CHECK(substitute_power(poly({1, 1}), 2) == poly({1, 0, 1}));
  CHECK(neg_q_pochhammer(2) == poly({1, 1, 1, 1}));
  CHECK(neg_q_pochhammer(0) == QPolynomial::one());

  // 1/(q;q)_inf counts all partitions.
  const auto p = inv_pochhammer(1, std::nullopt, 20);
  for (int n = 0; n <= 20; ++n) REQUIRE(p.coeff(n) == brute::partitions(n).size());
  CHECK(p.truncation() == 20);

  // 1/(q^2;q^2)_2 counts partitions of n/2 into parts <= 2.
  const auto two = inv_pochhammer(2, 2, 12);
  for (int n = 0; n <= 12; ++n) REQUIRE(two.coeff(n) == (n % 2 ? 0 : n / 4 + 1));
}

TEST_CASE("enumerated generating functions agree with the definition") {
  for (int L = 0; L <= 9; ++L)
    for (int k = -3; k <= 4; ++k) {
      const auto gf = strict_bgrank_gf(L, k);
      std::vector<BigInt> expect;
      for (const auto& parts : brute::strict_subsets(L)) {
        if (brute::bg_rank(parts) != k) continue;
        const auto n = static_cast<std::size_t>(brute::sum(parts));
        if (expect.size() <= n) expect.resize(n + 1);
        expect[n] += 1;
      }
      REQUIRE(gf == QPolynomial(expect));
    }

  const auto by_rank = all_bgrank_gf_by_rank(5, 14);
  for (int k = -3; k <= 3; ++k) {
    const auto single = all_bgrank_gf(5, k, 14);
    const auto it = by_rank.find(k);
    const QPolynomial from_map = it == by_rank.end() ? QPolynomial({}, 14) : it->second;
    REQUIRE(first_mismatch(single, from_map) == std::nullopt);
    for (int n = 0; n <= 14; ++n) {
      long long c = 0;
      for (const auto& parts : brute::partitions(n))
        if ((parts.empty() || parts.front() <= 5) && brute::bg_rank(parts) == k) ++c;
      REQUIRE(single.coeff(n) == c);
    }
  }
}

TEST_CASE("identities hold") {
  CHECK(verify_eq1(4, 1, 2).equal);
  CHECK(verify_eq1(3, 0, -4).equal);  // k out of range: both sides vanish
  CHECK(verify_eq52(3, 1).equal);
  CHECK(verify_eq2(1, 30).equal);
  CHECK(verify_eq3(30).equal);
  CHECK(verify_eq51(2, 1, 1, 20).equal);
  CHECK(verify_eq53(2, 1, 20).equal);
}

TEST_CASE("a broken binomial is caught with the first bad exponent") {
  const GaussianFn broken = [](int m, int n) {
    auto g = gaussian_binomial(m, n);
    if (m == 4 && n == 2) g += QPolynomial::monomial(2);
    return g;
  };
  // B_4(0,q) uses [4 choose 2]_{q^2}; the extra q^2 lands at q^4.
  const auto r = verify_eq1(2, 0, 0, broken);
  CHECK(!r.equal);
  CHECK(r.mismatch_exponent == 4);
  CHECK(r.rhs_at_mismatch == r.lhs_at_mismatch + 1);
  CHECK(r.to_json()["ok"] == false);
  CHECK(r.to_json()["mismatch"]["exponent"] == 4);
  CHECK(!verify_eq52(2, 0, broken).equal);
}
