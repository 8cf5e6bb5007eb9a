#pragma once

// Exact polynomials and truncated power series in q with unbounded integer
// coefficients, and checkers for the BG-rank generating-function identities.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace bgrank {

using BigInt = boost::multiprecision::cpp_int;

/// Dense coefficient vector indexed by the exponent of q. A truncated value
/// knows only the coefficients up to degree `truncation()`.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs, std::optional<int> truncation = std::nullopt);

  static QPolynomial monomial(int exponent, BigInt coeff = 1);
  static QPolynomial one() { return monomial(0); }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::optional<int> truncation() const noexcept { return truncation_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int exponent) const;

  QPolynomial truncated(int degree) const;
  /// Multiply by q^e, e >= 0.
  QPolynomial shifted(int e) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);

  /// Exact equality: coefficients and truncation.
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "1 + q^2 + 2*q^4", with " + O(q^{D+1})" appended when truncated.
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
  std::optional<int> truncation_;
};

/// First exponent where the two differ, comparing only up to the smaller
/// truncation degree. nullopt means they agree.
std::optional<int> first_mismatch(const QPolynomial& lhs, const QPolynomial& rhs);

/// [m choose n]_q by the q-Pascal recurrence; zero outside 0 <= n <= m.
QPolynomial gaussian_binomial(int m, int n);

/// p(q) -> p(q^j).
QPolynomial substitute_power(const QPolynomial& p, int j);

/// (-q;q)_L = prod_{i=1}^{L} (1 + q^i).
QPolynomial neg_q_pochhammer(int L);

/// 1 / prod_{i=1}^{n} (1 - q^{base*i}) truncated at degree D; nullopt for n
/// means the infinite product.
QPolynomial inv_pochhammer(int base, std::optional<int> factors, int D);

/// Strict partitions with parts <= max_part and BG-rank k, by subset enumeration.
QPolynomial strict_bgrank_gf(int max_part, int k);

/// All partitions with parts <= max_part, size <= D and BG-rank k.
QPolynomial all_bgrank_gf(int max_part, int k, int D);
/// Same enumeration, every rank at once.
std::map<int, QPolynomial> all_bgrank_gf_by_rank(int max_part, int D);

/// Strict partitions of every n <= D, no part bound, split by BG-rank.
std::map<int, QPolynomial> strict_bgrank_series_by_rank(int D);

using GaussianFn = std::function<QPolynomial(int, int)>;

struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, long long>> params;
  bool equal = false;
  std::optional<int> mismatch_exponent;
  BigInt lhs_at_mismatch;
  BigInt rhs_at_mismatch;
  QPolynomial lhs;
  QPolynomial rhs;
  double ms = 0.0;

  /// One line, no timing.
  std::string summary() const;
  nlohmann::json to_json() const;
};

/// B_{2N+nu}(k,q) against q^{2k^2-k} [2N+nu choose N+k]_{q^2}.
VerificationReport verify_eq1(int N, int nu, int k, const GaussianFn& gauss = gaussian_binomial);
/// sum_k q^{2k^2-k} [2N+nu choose N+k]_{q^2} against (-q;q)_{2N+nu}.
VerificationReport verify_eq52(int N, int nu, const GaussianFn& gauss = gaussian_binomial);
/// Strict partitions of rank k against q^{2k^2-k} / (q^2;q^2)_inf, up to q^D.
VerificationReport verify_eq2(int k, int D);
VerificationReport verify_eq3(int D);
/// All partitions with parts <= 2N+nu and rank k against
/// q^{2k^2-k} / ((q^2;q^2)_{N+k} (q^2;q^2)_{N+nu-k}), up to q^D.
VerificationReport verify_eq51(int N, int nu, int k, int D);
/// sum_k of the right sides above against 1/(q;q)_{2N+nu}, up to q^D.
VerificationReport verify_eq53(int N, int nu, int D);

/// Variants taking a precomputed left side (as produced by the *_by_rank
/// enumerators) so sweeps can reuse one enumeration.
VerificationReport verify_eq2_with(int k, int D, const QPolynomial& lhs);
VerificationReport verify_eq51_with(int N, int nu, int k, int D, const QPolynomial& lhs);

}  // namespace bgrank
