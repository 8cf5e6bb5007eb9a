#include "bgrank/acceptance.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "bgrank/composed.hpp"
#include "bgrank/enumerate.hpp"
#include "bgrank/error.hpp"

namespace bgrank::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures and keeps the first few for the report line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void fail(const std::string& what) { check(false, what); }

  CriterionResult finish(int id, std::string name, Clock::time_point start,
                         const std::string& note = {}) const {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.passed = failures_ == 0 && checks_ > 0;
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " failures";
    if (!note.empty()) os << ", " << note;
    if (!first_.empty()) os << " [" << first_ << "]";
    r.detail = os.str();
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
  }

 private:
  long long checks_ = 0;
  long long failures_ = 0;
  std::string first_;
};

std::string str(const std::vector<int>& v) { return "(" + format_int_list(v) + ")"; }

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

struct Golden {
  std::vector<int> source;
  ParameterBox box;
  long long t;
  std::vector<int> profile;
  std::vector<int> delta;
  std::vector<int> cover;
  std::vector<int> image;
  int L;
  int M;
};

const std::vector<Golden>& golden_fixtures() {
  static const std::vector<Golden> fixtures = {
      {{9, 7, 5, 4, 1}, {4, 1, 2}, 6, {1, 2, 3, 4, 5, 4, 4, 2, 1}, {4, 5, 4, 4, 2, 1},
       {4, 1, 3, 1, 1}, {6, 3, 1}, 6, 3},
      {{12, 11, 6, 4, 2}, {6, 0, -1}, 3, {1, 2, 3, 4, 5, 5, 4, 3, 2, 2, 2, 2},
       {3, 4, 5, 5, 4, 3, 2, 2, 2, 2}, {3, 1, 4, 1, 3, 0, 2, 0, 2}, {5, 4, 3, 2, 2}, 7, 5},
      {{11, 8, 6, 5, 4, 3, 2, 1}, {5, 1, -2}, 10, {1, 2, 3, 4, 5, 6, 7, 8, 2, 1, 1},
       {5, 6, 7, 8, 2, 1, 1}, {5, 1, 6, 2, 0, 1}, {8, 7}, 8, 3},
      {{11, 8, 7, 4, 3, 1}, {6, 1, 2}, 6, {1, 2, 3, 4, 5, 6, 5, 3, 3, 1, 1},
       {4, 5, 6, 5, 3, 3, 1, 1}, {4, 1, 5, 0, 3, 0, 1}, {5, 5, 3, 1}, 8, 5},
  };
  return fixtures;
}

// Strict partitions with |d| <= n_max.
template <typename F>
void for_each_strict(int n_max, F&& f) {
  for (int n = 0; n <= n_max; ++n)
    for (const auto& p : enumerate(EnumSpec{n, std::nullopt, std::nullopt, true, std::nullopt}))
      f(StrictPartition(p));
}

}  // namespace

CriterionResult golden_examples(const SuiteOptions&) {
  const auto start = Clock::now();
  Tally tally;
  for (const auto& g : golden_fixtures()) {
    const std::string tag = str(g.source);
    try {
      const StrictPartition d(g.source);
      tally.check(shifted_column_profile(d) == g.profile, tag + " profile");
      const MappedPair mp = psi_forward(d, g.box, PsiOptions{false});
      tally.check(mp.triangular == g.t, tag + " t");
      tally.check(to_vec(mp.delta.entries()) == g.delta, tag + " delta");
      tally.check(mp.cover.covered == g.cover, tag + " b vector");
      tally.check(to_vec(mp.image.parts()) == g.image, tag + " image");

      const InverseTrace back = psi_inverse_trace(g.t, Partition(g.image));
      tally.check(back.cover.covered == g.cover, tag + " inverse b vector");
      tally.check(to_vec(back.delta.entries()) == g.delta, tag + " inverse delta");
      tally.check(psi_inverse(g.t, Partition(g.image), g.box, PsiOptions{false}) == d,
                  tag + " inverse");

      const auto rp = recover_parameters(g.t, g.L, g.M);
      tally.check(rp.k == g.box.k && rp.N == g.box.N && rp.nu == g.box.nu, tag + " parameters");
      const ImageBounds bounds = g.box.image_bounds(false);
      tally.check(bounds.largest == g.L && bounds.length == g.M, tag + " box");
    } catch (const Error& e) {
      tally.fail(tag + ": " + e.what());
    }
  }
  return tally.finish(1, "golden-examples", start);
}

CriterionResult eq1_exact(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Tally tally;
  const int n_top = opts.quick ? 3 : 5;
  for (int N = 0; N <= n_top; ++N)
    for (int nu = 0; nu <= 1; ++nu)
      for (int k = -N - 1; k <= N + nu + 1; ++k) {
        const auto r = verify_eq1(N, nu, k, opts.gaussian);
        tally.check(r.equal, r.summary());
      }
  return tally.finish(2, "eq1-exact", start);
}

CriterionResult eq52_exact(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Tally tally;
  const int n_top = opts.quick ? 3 : 5;
  for (int N = 0; N <= n_top; ++N)
    for (int nu = 0; nu <= 1; ++nu) {
      const auto r = verify_eq52(N, nu, opts.gaussian);
      tally.check(r.equal, r.summary());
    }
  return tally.finish(3, "eq52-exact", start);
}

CriterionResult truncated_identities(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Tally tally;
  const int D = opts.quick ? 20 : 40;
  const int n_top = opts.quick ? 3 : 5;
  const int k_top = 3;

  const auto strict = strict_bgrank_series_by_rank(D);
  for (int k = -k_top; k <= k_top; ++k) {
    const auto it = strict.find(k);
    const auto r = verify_eq2_with(k, D, it == strict.end() ? QPolynomial({}, D) : it->second);
    tally.check(r.equal, r.summary());
  }
  {
    const auto r = verify_eq3(D);
    tally.check(r.equal, r.summary());
  }
  for (int N = 0; N <= n_top; ++N)
    for (int nu = 0; nu <= 1; ++nu) {
      const auto all = all_bgrank_gf_by_rank(2 * N + nu, D);
      for (int k = -k_top; k <= k_top; ++k) {
        const auto it = all.find(k);
        const auto r =
            verify_eq51_with(N, nu, k, D, it == all.end() ? QPolynomial({}, D) : it->second);
        tally.check(r.equal, r.summary());
      }
      const auto r = verify_eq53(N, nu, D);
      tally.check(r.equal, r.summary());
    }
  return tally.finish(4, "truncated-identities", start, "D=" + std::to_string(D));
}

CriterionResult theorem_cardinality(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Tally tally;
  const int n_max = opts.quick ? 16 : 28;
  const int n_top = opts.quick ? 4 : 6;
  const int k_top = 4;
  long long nonempty = 0;
  for (int N = 0; N <= n_top; ++N)
    for (int nu = 0; nu <= 1; ++nu)
      for (int k = -k_top; k <= k_top; ++k)
        for (int n = 0; n <= n_max; ++n) {
          const long long lhs = count_strict_bounded(n, k, N, nu);
          const int twice = n - 2 * k * k + k;
          const long long rhs =
              (twice < 0 || twice % 2 != 0) ? 0 : count_box(twice / 2, N + nu - k, N + k);
          if (lhs > 0) ++nonempty;
          std::ostringstream os;
          os << "n=" << n << " N=" << N << " nu=" << nu << " k=" << k << ": " << lhs
             << " vs " << rhs;
          tally.check(lhs == rhs, os.str());
        }
  return tally.finish(5, "theorem-cardinality", start,
                      std::to_string(nonempty) + " non-empty classes");
}

CriterionResult bijection_properties(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Tally tally;
  const int n_max = opts.quick ? 16 : 28;
  const int box_top = opts.quick ? 4 : 6;
  long long mapped = 0;

  for_each_strict(n_max, [&](const StrictPartition& d) {
    const std::string tag = "(" + to_string(d.partition()) + ")";
    const int k = bg_rank(d.partition());
    try {
      const IotaImage split = iota(d);
      tally.check(split.m == a_from_k(k), tag + " split point");
      tally.check(split.t == 2LL * k * k - k, tag + " triangular part");
      tally.check(check_last_block_bound(d), tag + " last block index");

      std::vector<ParameterBox> boxes{minimal_box(d)};
      for (int N = 0; N <= box_top; ++N)
        for (int nu = 0; nu <= 1; ++nu) {
          const ParameterBox box{N, nu, k};
          if (box.admissible() && box.max_part() >= d.largest() && box != boxes.front())
            boxes.push_back(box);
        }
      for (const auto& box : boxes)
        for (bool conj : {true, false}) {
          const MappedPair mp = psi_forward(d, box, PsiOptions{conj});
          ++mapped;
          tally.check(d.size() == mp.triangular + 2LL * mp.image.size(), tag + " size law");
          const ImageBounds b = box.image_bounds(mp.conjugated);
          tally.check(mp.image.largest() <= b.largest && mp.image.length() <= b.length,
                      tag + " forward bounds");
          const StrictPartition back = psi_inverse(mp.triangular, mp.image, box, PsiOptions{conj});
          tally.check(back == d, tag + " round trip");
          tally.check(back.largest() <= box.max_part(), tag + " inverse bound");
        }
    } catch (const Error& e) {
      tally.fail(tag + ": " + e.what());
    }
  });

  // Reverse direction: every partition in every box comes from some d.
  long long inverted = 0;
  for (int N = 0; N <= box_top; ++N)
    for (int nu = 0; nu <= 1; ++nu)
      for (int k = -N; k <= N + nu; ++k) {
        if (k < -4 || k > 4) continue;
        const ParameterBox box{N, nu, k};
        const long long t = 2LL * k * k - k;
        for (bool conj : {true, false}) {
          if (!conj && k <= 0) continue;
          const ImageBounds b = box.image_bounds(conj && k > 0);
          for (long long size = 0; t + 2 * size <= n_max; ++size) {
            for (const auto& pi : enumerate(EnumSpec{static_cast<int>(size), b.largest,
                                                     b.length, false, std::nullopt})) {
              const std::string tag = "t=" + std::to_string(t) + " (" + to_string(pi) + ")";
              try {
                const StrictPartition d = psi_inverse(t, pi, box, PsiOptions{conj});
                const MappedPair mp = psi_forward(d, box, PsiOptions{conj});
                ++inverted;
                tally.check(mp.triangular == t && mp.image == pi, tag + " reverse round trip");
                tally.check(d.largest() <= box.max_part(), tag + " inverse bound");
              } catch (const Error& e) {
                tally.fail(tag + ": " + e.what());
              }
            }
          }
        }
      }
  return tally.finish(6, "bijection-properties", start,
                      std::to_string(mapped) + " forward, " + std::to_string(inverted) +
                          " inverse");
}

CriterionResult oracle_equivalences(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Tally tally;
  const int m_top = opts.quick ? 7 : 10;
  for (int m = 0; m <= m_top; ++m)
    for (int n = 0; n <= m; ++n) {
      const QPolynomial g = opts.gaussian(m, n);
      for (int j = 0; j <= n * (m - n) + 1; ++j) {
        tally.check(g.coeff(j) == count_box(j, m - n, n),
                    "[" + std::to_string(m) + " " + std::to_string(n) + "] at q^" +
                        std::to_string(j));
      }
    }

  const int p_top = opts.quick ? 8 : 12;
  for (int P = 0; P <= p_top; ++P) {
    QPolynomial sum;
    for (int k = -P; k <= P; ++k) sum += strict_bgrank_gf(P, k);
    tally.check(sum == neg_q_pochhammer(P), "rank sum at max part " + std::to_string(P));
  }

  const int n_top = opts.quick ? 14 : 20;
  for (int n = 0; n <= n_top; ++n)
    for (const auto& p : enumerate(EnumSpec{n, std::nullopt, std::nullopt, false, std::nullopt}))
      tally.check(conjugate(conjugate(p)) == p, "involution at (" + to_string(p) + ")");

  const int box_top = opts.quick ? 5 : 8;
  for (int n = 0; n <= n_top; ++n)
    for (int L = 0; L <= box_top; ++L)
      for (int M = 0; M <= box_top; ++M) {
        std::set<Partition> images;
        bool inside = true;
        for (const auto& p : enumerate(EnumSpec{n, L, M, false, std::nullopt})) {
          const Partition c = conjugate(p);
          inside = inside && c.largest() <= M && c.length() <= L && c.size() == n;
          images.insert(c);
        }
        const long long target = count_box(n, M, L);
        tally.check(inside && static_cast<long long>(images.size()) == target,
                    "conjugation P(" + std::to_string(n) + "," + std::to_string(L) + "," +
                        std::to_string(M) + ")");
      }
  return tally.finish(7, "oracle-equivalences", start);
}

CriterionResult descending_case_coverage(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Tally tally;
  const int n_max = opts.quick ? 16 : 28;
  long long hits = 0;
  auto exercise = [&](const StrictPartition& d) {
    const MappedPair mp = psi_forward(d);
    if (mp.kind != IotaCase::Descending) return false;
    tally.check(mp.a_seq <= mp.m - 1 && mp.delta.b() == 1,
                "(" + to_string(d.partition()) + ") shape");
    tally.check(psi_inverse(mp.triangular, mp.image, minimal_box(d)) == d,
                "(" + to_string(d.partition()) + ") round trip");
    return true;
  };
  try {
    tally.check(exercise(StrictPartition({4, 1})), "(4,1) is not in the descending case");
    for_each_strict(n_max, [&](const StrictPartition& d) {
      if (exercise(d)) ++hits;
    });
  } catch (const Error& e) {
    tally.fail(e.what());
  }
  tally.check(hits > 0, "sweep never reached the descending case");
  return tally.finish(8, "descending-case-coverage", start,
                      std::to_string(hits) + " descending-case sources");
}

std::vector<CriterionResult> run_all(const SuiteOptions& opts,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  using Fn = CriterionResult (*)(const SuiteOptions&);
  const Fn criteria[] = {golden_examples,     eq1_exact,           eq52_exact,
                         truncated_identities, theorem_cardinality, bijection_properties,
                         oracle_equivalences,  descending_case_coverage};
  std::vector<CriterionResult> out;
  for (Fn fn : criteria) {
    out.push_back(fn(opts));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << " ("
     << static_cast<long long>(r.ms) << " ms): " << r.detail;
  return os.str();
}

}  // namespace bgrank::acceptance
