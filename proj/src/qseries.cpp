#include "bgrank/qseries.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace bgrank {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs, std::optional<int> truncation)
    : coeffs_(std::move(coeffs)), truncation_(truncation) {
  normalize();
}

void QPolynomial::normalize() {
  if (truncation_ && static_cast<int>(coeffs_.size()) > *truncation_ + 1)
    coeffs_.resize(static_cast<std::size_t>(std::max(0, *truncation_ + 1)));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(int exponent, BigInt coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1, 0);
  c.back() = std::move(coeff);
  return QPolynomial(std::move(c));
}

BigInt QPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

QPolynomial QPolynomial::truncated(int degree) const {
  const int d = truncation_ ? std::min(*truncation_, degree) : degree;
  return QPolynomial(coeffs_, d);
}

QPolynomial QPolynomial::shifted(int e) const {
  if (is_zero()) {
    QPolynomial z;
    if (truncation_) z.truncation_ = *truncation_ + e;
    return z;
  }
  std::vector<BigInt> c(static_cast<std::size_t>(e), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPolynomial(std::move(c), truncation_ ? std::optional<int>(*truncation_ + e) : std::nullopt);
}

namespace {

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

}  // namespace

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  truncation_ = min_truncation(truncation_, rhs.truncation_);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  const auto trunc = min_truncation(lhs.truncation_, rhs.truncation_);
  if (lhs.is_zero() || rhs.is_zero()) return QPolynomial({}, trunc);
  std::size_t size = lhs.coeffs_.size() + rhs.coeffs_.size() - 1;
  if (trunc) size = std::min(size, static_cast<std::size_t>(*trunc + 1));
  std::vector<BigInt> out(size, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size() && i < size; ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size() && i + j < size; ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPolynomial(std::move(out), trunc);
}

std::string QPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    BigInt c = coeffs_[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'q';
    if (e > 1) os << '^' << e;
  }
  if (first) os << '0';
  if (truncation_) os << " + O(q^" << (*truncation_ + 1) << ')';
  return os.str();
}

nlohmann::json QPolynomial::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.str());
  return {{"coeffs", coeffs},
          {"truncation", truncation_ ? nlohmann::json(*truncation_) : nlohmann::json(nullptr)}};
}

std::optional<int> first_mismatch(const QPolynomial& lhs, const QPolynomial& rhs) {
  int top = std::max(lhs.degree(), rhs.degree());
  if (const auto t = min_truncation(lhs.truncation(), rhs.truncation())) top = std::min(top, *t);
  for (int e = 0; e <= top; ++e)
    if (lhs.coeff(e) != rhs.coeff(e)) return e;
  return std::nullopt;
}

QPolynomial gaussian_binomial(int m, int n) {
  if (m < 0 || n < 0 || n > m) return {};
  // row[j] holds [i choose j]_q as i runs up to m.
  std::vector<QPolynomial> row(static_cast<std::size_t>(n) + 1);
  row[0] = QPolynomial::one();
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, n); j >= 1; --j) {
      // [i j] = [i-1 j-1] + q^j [i-1 j]
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    }
  }
  return row[static_cast<std::size_t>(n)];
}

QPolynomial substitute_power(const QPolynomial& p, int j) {
  std::vector<BigInt> c;
  if (!p.is_zero()) {
    c.assign(static_cast<std::size_t>(p.degree() * j) + 1, 0);
    for (int e = 0; e <= p.degree(); ++e) c[static_cast<std::size_t>(e * j)] = p.coeff(e);
  }
  const auto t = p.truncation();
  return QPolynomial(std::move(c), t ? std::optional<int>(*t * j) : std::nullopt);
}

QPolynomial neg_q_pochhammer(int L) {
  QPolynomial out = QPolynomial::one();
  for (int i = 1; i <= L; ++i) out = out * (QPolynomial::one() + QPolynomial::monomial(i));
  return out;
}

QPolynomial inv_pochhammer(int base, std::optional<int> factors, int D) {
  std::vector<BigInt> c(static_cast<std::size_t>(D) + 1, 0);
  c[0] = 1;
  for (int i = 1; factors ? i <= *factors : base * i <= D; ++i) {
    const int step = base * i;
    if (step > D) continue;
    for (int e = step; e <= D; ++e)
      c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - step)];
  }
  return QPolynomial(std::move(c), D);
}

namespace {

QPolynomial from_counts(const std::vector<long long>& counts, std::optional<int> truncation) {
  std::vector<BigInt> c(counts.begin(), counts.end());
  return QPolynomial(std::move(c), truncation);
}

void all_rank_dfs(int remaining, int cap, int index, int rank, int size, int D,
                  std::map<int, std::vector<long long>>& out) {
  auto& slot = out[rank];
  if (slot.empty()) slot.assign(static_cast<std::size_t>(D) + 1, 0);
  ++slot[static_cast<std::size_t>(size)];
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    const int delta = part % 2 == 0 ? 0 : (index % 2 == 1 ? 1 : -1);
    all_rank_dfs(remaining - part, part, index + 1, rank + delta, size + part, D, out);
  }
}

void strict_rank_dfs(int remaining, int cap, int index, int rank, int size, int D,
                     std::map<int, std::vector<long long>>& out) {
  auto& slot = out[rank];
  if (slot.empty()) slot.assign(static_cast<std::size_t>(D) + 1, 0);
  ++slot[static_cast<std::size_t>(size)];
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    const int delta = part % 2 == 0 ? 0 : (index % 2 == 1 ? 1 : -1);
    strict_rank_dfs(remaining - part, part - 1, index + 1, rank + delta, size + part, D, out);
  }
}

}  // namespace

QPolynomial strict_bgrank_gf(int max_part, int k) {
  if (max_part < 0) max_part = 0;
  std::vector<long long> counts(static_cast<std::size_t>(max_part * (max_part + 1) / 2) + 1, 0);
  const unsigned long long subsets = 1ULL << max_part;
  for (unsigned long long mask = 0; mask < subsets; ++mask) {
    int rank = 0;
    int size = 0;
    int index = 0;
    for (int part = max_part; part >= 1; --part) {
      if (!(mask >> (part - 1) & 1ULL)) continue;
      ++index;
      size += part;
      if (part % 2 == 1) rank += (index % 2 == 1) ? 1 : -1;
    }
    if (rank == k) ++counts[static_cast<std::size_t>(size)];
  }
  return from_counts(counts, std::nullopt);
}

std::map<int, QPolynomial> all_bgrank_gf_by_rank(int max_part, int D) {
  std::map<int, std::vector<long long>> counts;
  all_rank_dfs(D, std::max(0, max_part), 1, 0, 0, D, counts);
  std::map<int, QPolynomial> out;
  for (const auto& [rank, c] : counts) out.emplace(rank, from_counts(c, D));
  return out;
}

QPolynomial all_bgrank_gf(int max_part, int k, int D) {
  auto all = all_bgrank_gf_by_rank(max_part, D);
  const auto it = all.find(k);
  return it == all.end() ? QPolynomial({}, D) : it->second;
}

std::map<int, QPolynomial> strict_bgrank_series_by_rank(int D) {
  std::map<int, std::vector<long long>> counts;
  strict_rank_dfs(D, D, 1, 0, 0, D, counts);
  std::map<int, QPolynomial> out;
  for (const auto& [rank, c] : counts) out.emplace(rank, from_counts(c, D));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport finish(std::string identity,
                          std::vector<std::pair<std::string, long long>> params,
                          QPolynomial lhs, QPolynomial rhs, Clock::time_point start) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.mismatch_exponent = first_mismatch(lhs, rhs);
  r.equal = !r.mismatch_exponent;
  if (r.mismatch_exponent) {
    r.lhs_at_mismatch = lhs.coeff(*r.mismatch_exponent);
    r.rhs_at_mismatch = rhs.coeff(*r.mismatch_exponent);
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

long long triangular_exponent(int k) { return 2LL * k * k - k; }

QPolynomial eq1_rhs(int N, int nu, int k, const GaussianFn& gauss) {
  return substitute_power(gauss(2 * N + nu, N + k), 2)
      .shifted(static_cast<int>(triangular_exponent(k)));
}

QPolynomial eq51_rhs(int N, int nu, int k, int D) {
  if (N + k < 0 || N + nu - k < 0) return QPolynomial({}, D);
  return (inv_pochhammer(2, N + k, D) * inv_pochhammer(2, N + nu - k, D))
      .shifted(static_cast<int>(triangular_exponent(k)))
      .truncated(D);
}

}  // namespace

VerificationReport verify_eq1(int N, int nu, int k, const GaussianFn& gauss) {
  const auto start = Clock::now();
  return finish("eq1", {{"N", N}, {"nu", nu}, {"k", k}}, strict_bgrank_gf(2 * N + nu, k),
                eq1_rhs(N, nu, k, gauss), start);
}

VerificationReport verify_eq52(int N, int nu, const GaussianFn& gauss) {
  const auto start = Clock::now();
  QPolynomial lhs;
  for (int k = -N; k <= N + nu; ++k) lhs += eq1_rhs(N, nu, k, gauss);
  return finish("eq52", {{"N", N}, {"nu", nu}}, std::move(lhs), neg_q_pochhammer(2 * N + nu),
                start);
}

VerificationReport verify_eq2_with(int k, int D, const QPolynomial& lhs) {
  const auto start = Clock::now();
  QPolynomial rhs = inv_pochhammer(2, std::nullopt, D)
                        .shifted(static_cast<int>(triangular_exponent(k)))
                        .truncated(D);
  return finish("eq2", {{"k", k}, {"degree", D}}, lhs.truncated(D), std::move(rhs), start);
}

VerificationReport verify_eq2(int k, int D) {
  const auto all = strict_bgrank_series_by_rank(D);
  const auto it = all.find(k);
  return verify_eq2_with(k, D, it == all.end() ? QPolynomial({}, D) : it->second);
}

VerificationReport verify_eq3(int D) {
  VerificationReport r = verify_eq2(0, D);
  r.identity = "eq3";
  r.params = {{"degree", D}};
  return r;
}

VerificationReport verify_eq51_with(int N, int nu, int k, int D, const QPolynomial& lhs) {
  const auto start = Clock::now();
  return finish("eq51", {{"N", N}, {"nu", nu}, {"k", k}, {"degree", D}}, lhs.truncated(D),
                eq51_rhs(N, nu, k, D), start);
}

VerificationReport verify_eq51(int N, int nu, int k, int D) {
  return verify_eq51_with(N, nu, k, D, all_bgrank_gf(2 * N + nu, k, D));
}

VerificationReport verify_eq53(int N, int nu, int D) {
  const auto start = Clock::now();
  QPolynomial lhs({}, D);
  for (int k = -N; k <= N + nu; ++k) lhs += eq51_rhs(N, nu, k, D);
  return finish("eq53", {{"N", N}, {"nu", nu}, {"degree", D}}, std::move(lhs),
                inv_pochhammer(1, 2 * N + nu, D), start);
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << identity;
  for (const auto& [name, value] : params) os << ' ' << name << '=' << value;
  if (equal) {
    os << ": equal";
  } else {
    os << ": MISMATCH at q^" << *mismatch_exponent << " (lhs " << lhs_at_mismatch << ", rhs "
       << rhs_at_mismatch << ')';
  }
  return os.str();
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json input = nlohmann::json::object();
  for (const auto& [name, value] : params) input[name] = value;
  nlohmann::json mismatch = nullptr;
  if (!equal)
    mismatch = {{"exponent", *mismatch_exponent},
                {"lhs", lhs_at_mismatch.str()},
                {"rhs", rhs_at_mismatch.str()}};
  return {{"cmd", "verify"}, {"identity", identity}, {"input", input}, {"ok", equal},
          {"mismatch", mismatch}, {"lhs", lhs.to_json()}, {"rhs", rhs.to_json()}, {"ms", ms}};
}

}  // namespace bgrank
