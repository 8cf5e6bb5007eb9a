#include "bgrank/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "bgrank/acceptance.hpp"
#include "bgrank/composed.hpp"
#include "bgrank/enumerate.hpp"
#include "bgrank/error.hpp"
#include "bgrank/partition.hpp"
#include "bgrank/qseries.hpp"
#include "bgrank/render.hpp"
#include "json.hpp"

namespace bgrank::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::Parse || kind == ErrorKind::InvalidPartition ||
         kind == ErrorKind::NotStrict;
}

std::string show(const Partition& p) { return p.empty() ? "(empty)" : to_string(p); }

std::string show(std::span<const int> v) { return v.empty() ? "(empty)" : format_int_list(v); }

json to_json_array(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

const char* case_name(IotaCase c) {
  switch (c) {
    case IotaCase::StaircaseMatch: return "staircase";
    case IotaCase::Descending: return "descending";
    case IotaCase::Empty: return "empty";
  }
  return "?";
}

std::optional<std::pair<int, int>> parse_box(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto v = parse_int_list(text);
  if (v.size() != 2 || v[0] < 0 || (v[1] != 0 && v[1] != 1))
    throw Error(ErrorKind::Parse, "--box expects N,nu with N >= 0 and nu in {0,1}");
  return std::make_pair(v[0], v[1]);
}

void print_row(std::ostream& out, const std::string& label, const std::string& value) {
  out << label;
  for (std::size_t i = label.size(); i < 12; ++i) out << ' ';
  out << value << '\n';
}

// ---------------------------------------------------------------- map

struct MapArgs {
  std::string partition;
  std::string box;
  bool no_conjugate = false;
  bool json = false;
};

int cmd_map(const MapArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  const StrictPartition d = parse_strict_partition(args.partition);
  const int k = bg_rank(d.partition());
  ParameterBox box = minimal_box(d);
  if (const auto nb = parse_box(args.box)) box = ParameterBox{nb->first, nb->second, k};
  const MappedPair mp = psi_forward(d, box, PsiOptions{!args.no_conjugate});
  const ImageBounds bounds = box.image_bounds(mp.conjugated);

  if (args.json) {
    out << json{{"cmd", "map"},
                {"input", to_string(d.partition())},
                {"n", d.size()},
                {"k", mp.k},
                {"m", mp.m},
                {"t", mp.triangular},
                {"a", mp.a_seq},
                {"b", mp.delta.b()},
                {"case", case_name(mp.kind)},
                {"profile", to_json_array(shifted_column_profile(d))},
                {"delta", to_json_array(mp.delta.entries())},
                {"cover", mp.cover.covered},
                {"image", to_string(mp.image)},
                {"conjugated", mp.conjugated},
                {"box", {{"N", box.N}, {"nu", box.nu}}},
                {"bounds", {{"L", bounds.largest}, {"M", bounds.length}}},
                {"ok", true},
                {"mismatch", nullptr},
                {"ms", elapsed_ms(start)}}
               .dump()
        << '\n';
    return kPass;
  }
  print_row(out, "input", show(d.partition()));
  print_row(out, "n", std::to_string(d.size()));
  print_row(out, "k", std::to_string(mp.k));
  print_row(out, "box", "N=" + std::to_string(box.N) + " nu=" + std::to_string(box.nu) +
                            " (largest part <= " + std::to_string(box.max_part()) + ")");
  print_row(out, "profile", show(shifted_column_profile(d)));
  print_row(out, "m", std::to_string(mp.m));
  print_row(out, "t", std::to_string(mp.triangular));
  print_row(out, "delta", show(mp.delta.entries()) + " (a=" + std::to_string(mp.a_seq) +
                              ", b=" + std::to_string(mp.delta.b()) + ", " +
                              case_name(mp.kind) + ")");
  print_row(out, "b", show(mp.cover.covered));
  print_row(out, "image", show(mp.image));
  print_row(out, "conjugated", mp.conjugated ? "yes" : "no");
  print_row(out, "bounds", "L=" + std::to_string(bounds.largest) +
                               " M=" + std::to_string(bounds.length) +
                               " (largest part <= L, at most M parts)");
  return kPass;
}

// ---------------------------------------------------------------- unmap

struct UnmapArgs {
  long long t = 0;
  std::string partition;
  std::string box;
  bool no_conjugate = false;
  bool conjugated = false;
  bool json = false;
};

int cmd_unmap(const UnmapArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  const Partition image = parse_partition(args.partition);
  int k = 0;
  try {
    k = k_from_triangular(args.t);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParameterMismatch, e.what());
  }
  const auto nb = parse_box(args.box);

  // Orientation: explicit flags win; otherwise a positive-rank image is read
  // as conjugated unless only the un-conjugated box holds it.
  bool conj = k > 0 && !args.no_conjugate;
  if (k > 0 && nb && !args.no_conjugate && !args.conjugated) {
    const ParameterBox box{nb->first, nb->second, k};
    auto fits = [&](bool c) {
      const ImageBounds b = box.image_bounds(c);
      return image.largest() <= b.largest && image.length() <= b.length;
    };
    conj = fits(true) || !fits(false);
  }

  const Partition raw = conj ? conjugate(image) : image;
  StrictPartition result;
  ParameterBox box;
  if (nb) {
    box = ParameterBox{nb->first, nb->second, k};
    result = psi_inverse(args.t, image, box, PsiOptions{conj});
  } else {
    result = psi_inverse_trace(args.t, raw).result;
    box = minimal_box(result);
  }
  const InverseTrace trace = psi_inverse_trace(args.t, raw);

  if (args.json) {
    const ImageBounds bounds = box.image_bounds(conj);
    out << json{{"cmd", "unmap"},
                {"input", {{"t", args.t}, {"image", to_string(image)}}},
                {"k", k},
                {"t", args.t},
                {"N", box.N},
                {"nu", box.nu},
                {"n", result.size()},
                {"m", trace.m},
                {"a", trace.a_seq},
                {"case", case_name(trace.kind)},
                {"delta", to_json_array(trace.delta.entries())},
                {"cover", trace.cover.covered},
                {"conjugated", conj},
                {"result", to_string(result.partition())},
                {"bounds", {{"L", bounds.largest}, {"M", bounds.length}}},
                {"ok", true},
                {"mismatch", nullptr},
                {"ms", elapsed_ms(start)}}
               .dump()
        << '\n';
    return kPass;
  }
  print_row(out, "t", std::to_string(args.t));
  print_row(out, "image", show(image));
  print_row(out, "k", std::to_string(k));
  print_row(out, "N", std::to_string(box.N) + (nb ? "" : " (minimal)"));
  print_row(out, "nu", std::to_string(box.nu));
  print_row(out, "n", std::to_string(result.size()));
  print_row(out, "conjugated", conj ? "yes" : "no");
  print_row(out, "b", show(trace.cover.covered));
  print_row(out, "delta", show(trace.delta.entries()) + " (a=" + std::to_string(trace.a_seq) +
                              ", " + case_name(trace.kind) + ")");
  print_row(out, "result", show(result.partition()));
  return kPass;
}

// ---------------------------------------------------------------- rank

int cmd_rank(const std::string& text, bool as_json, std::ostream& out) {
  const Partition p = parse_partition(text);
  const ResidueRank rr = bg_rank_residue(p);
  if (as_json) {
    out << json{{"cmd", "rank"},      {"input", to_string(p)},         {"k", bg_rank(p)},
                {"r0", rr.counts.r0}, {"r1", rr.counts.r1},           {"characteristic", characteristic(p)},
                {"strict", p.is_strict()}, {"ok", true}}
               .dump()
        << '\n';
    return kPass;
  }
  print_row(out, "input", show(p));
  print_row(out, "BG-rank", std::to_string(bg_rank(p)));
  print_row(out, "r0", std::to_string(rr.counts.r0));
  print_row(out, "r1", std::to_string(rr.counts.r1));
  print_row(out, "chi", std::to_string(characteristic(p)));
  print_row(out, "strict", p.is_strict() ? "yes" : "no");
  return kPass;
}

// ---------------------------------------------------------------- gf

struct GfArgs {
  std::string kind;
  int max_part = 0;
  int k = 0;
  int degree = 40;
  int m = 0;
  int n = 0;
  int L = 0;
  int base = 1;
  bool json = false;
};

int cmd_gf(const GfArgs& args, std::ostream& out) {
  QPolynomial p;
  if (args.kind == "strict")
    p = strict_bgrank_gf(args.max_part, args.k);
  else if (args.kind == "all")
    p = all_bgrank_gf(args.max_part, args.k, args.degree);
  else if (args.kind == "gaussian")
    p = gaussian_binomial(args.m, args.n);
  else if (args.kind == "pochhammer")
    p = neg_q_pochhammer(args.L);
  else if (args.kind == "inverse")
    p = inv_pochhammer(args.base, args.L > 0 ? std::optional<int>(args.L) : std::nullopt,
                       args.degree);
  else
    throw Error(ErrorKind::Parse, "unknown series '" + args.kind + "'");
  if (args.json) {
    json j = p.to_json();
    j["cmd"] = "gf";
    j["kind"] = args.kind;
    out << j.dump() << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string identity;
  std::string N;
  std::string nu = "0,1";
  std::string k;
  int degree = 40;
  int n_max = 28;
  bool json = false;
};

struct TupleResult {
  bool ok = true;
  std::string line;
  json record;
};

using Task = std::function<std::vector<TupleResult>()>;

unsigned worker_count(std::size_t tasks) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BGRANK_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(tasks)));
}

// Runs tasks on a small pool; results come back in task order.
std::vector<std::vector<TupleResult>> run_pool(const std::vector<Task>& tasks) {
  std::vector<std::vector<TupleResult>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  const unsigned n = worker_count(tasks.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

TupleResult from_report(const VerificationReport& r) {
  return TupleResult{r.equal, r.summary(), r.to_json()};
}

TupleResult make_result(const std::string& identity, json input, bool ok,
                        const std::string& summary, json mismatch, double ms) {
  TupleResult r;
  r.ok = ok;
  r.line = identity + " " + summary;
  r.record = json{{"cmd", "verify"}, {"identity", identity}, {"input", std::move(input)},
                  {"ok", ok},        {"mismatch", std::move(mismatch)}, {"ms", ms}};
  return r;
}

TupleResult theorem_tuple(int N, int nu, int k, int n_max) {
  const auto start = Clock::now();
  json mismatch = nullptr;
  std::string summary = "N=" + std::to_string(N) + " nu=" + std::to_string(nu) +
                        " k=" + std::to_string(k) + " n<=" + std::to_string(n_max);
  long long total = 0;
  for (int n = 0; n <= n_max; ++n) {
    const long long lhs = count_strict_bounded(n, k, N, nu);
    const int twice = n - 2 * k * k + k;
    const long long rhs =
        (twice < 0 || twice % 2 != 0) ? 0 : count_box(twice / 2, N + nu - k, N + k);
    total += lhs;
    if (lhs != rhs && mismatch.is_null()) mismatch = {{"n", n}, {"lhs", lhs}, {"rhs", rhs}};
  }
  const bool ok = mismatch.is_null();
  summary += ok ? ": equal (" + std::to_string(total) + " strict partitions)"
                : ": MISMATCH at n=" + std::to_string(mismatch["n"].get<int>());
  return make_result("theorem31", {{"N", N}, {"nu", nu}, {"k", k}, {"n_max", n_max}}, ok,
                     summary, mismatch, elapsed_ms(start));
}

TupleResult roundtrip_tuple(int n, const std::vector<int>& Ns, const std::vector<int>& nus) {
  const auto start = Clock::now();
  std::string first_failure;
  long long forward = 0;
  long long inverse = 0;
  auto note = [&](const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  };
  for (const auto& p : enumerate(EnumSpec{n, std::nullopt, std::nullopt, true, std::nullopt})) {
    const StrictPartition d(p);
    for (bool conj : {true, false}) {
      try {
        const ParameterBox box = minimal_box(d);
        const MappedPair mp = psi_forward(d, box, PsiOptions{conj});
        ++forward;
        if (psi_inverse(mp.triangular, mp.image, box, PsiOptions{conj}) != d)
          note("(" + to_string(p) + ") forward round trip");
      } catch (const Error& e) {
        note("(" + to_string(p) + "): " + e.what());
      }
    }
  }
  for (int N : Ns)
    for (int nu : nus)
      for (int k = -N; k <= N + nu; ++k) {
        const long long t = 2LL * k * k - k;
        if (t > n || (n - t) % 2 != 0) continue;
        const ParameterBox box{N, nu, k};
        const ImageBounds b = box.image_bounds(true);
        for (const auto& pi : enumerate(EnumSpec{static_cast<int>((n - t) / 2), b.largest,
                                                 b.length, false, std::nullopt})) {
          try {
            const StrictPartition d = psi_inverse(t, pi, box);
            const MappedPair mp = psi_forward(d, box);
            ++inverse;
            if (mp.triangular != t || mp.image != pi)
              note("t=" + std::to_string(t) + " (" + to_string(pi) + ") reverse round trip");
          } catch (const Error& e) {
            note("t=" + std::to_string(t) + " (" + to_string(pi) + "): " + e.what());
          }
        }
      }
  const bool ok = first_failure.empty();
  const std::string summary = "n=" + std::to_string(n) + ": " +
                              (ok ? "ok (" + std::to_string(forward) + " forward, " +
                                        std::to_string(inverse) + " inverse)"
                                  : "FAILED " + first_failure);
  return make_result("roundtrip", {{"n", n}}, ok, summary,
                     ok ? json(nullptr) : json{{"detail", first_failure}}, elapsed_ms(start));
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const std::string& id = args.identity;
  const bool uses_N = id == "eq1" || id == "eq52" || id == "eq51" || id == "eq53" ||
                      id == "theorem31" || id == "roundtrip";
  const auto Ns = parse_range(args.N.empty() ? (id == "theorem31" || id == "roundtrip" ? "0..6"
                                                                                      : "0..5")
                                             : args.N);
  const auto nus = parse_range(args.nu);
  for (int nu : nus)
    if (nu != 0 && nu != 1) throw Error(ErrorKind::Parse, "--nu takes values in {0,1}");
  for (int N : Ns)
    if (N < 0) throw Error(ErrorKind::Parse, "--N must be non-negative");
  if (args.degree < 0) throw Error(ErrorKind::Parse, "--degree must be non-negative");
  (void)uses_N;

  auto ks_for = [&](int N, int nu, const std::string& fallback) {
    if (!args.k.empty()) return parse_range(args.k);
    if (!fallback.empty()) return parse_range(fallback);
    return parse_range(std::to_string(-N - 1) + ".." + std::to_string(N + nu + 1));
  };
  const int D = args.degree;

  std::vector<Task> tasks;
  if (id == "eq1") {
    for (int N : Ns)
      for (int nu : nus)
        for (int k : ks_for(N, nu, ""))
          tasks.push_back([=] { return std::vector{from_report(verify_eq1(N, nu, k))}; });
  } else if (id == "eq52") {
    for (int N : Ns)
      for (int nu : nus)
        tasks.push_back([=] { return std::vector{from_report(verify_eq52(N, nu))}; });
  } else if (id == "eq2") {
    const auto ks = ks_for(0, 0, "-3..3");
    tasks.push_back([=] {
      const auto lhs = strict_bgrank_series_by_rank(D);
      std::vector<TupleResult> rs;
      for (int k : ks) {
        const auto it = lhs.find(k);
        rs.push_back(from_report(
            verify_eq2_with(k, D, it == lhs.end() ? QPolynomial({}, D) : it->second)));
      }
      return rs;
    });
  } else if (id == "eq3") {
    tasks.push_back([=] { return std::vector{from_report(verify_eq3(D))}; });
  } else if (id == "eq51") {
    for (int N : Ns)
      for (int nu : nus) {
        const auto ks = ks_for(N, nu, "-3..3");
        tasks.push_back([=] {
          const auto lhs = all_bgrank_gf_by_rank(2 * N + nu, D);
          std::vector<TupleResult> rs;
          for (int k : ks) {
            const auto it = lhs.find(k);
            rs.push_back(from_report(
                verify_eq51_with(N, nu, k, D, it == lhs.end() ? QPolynomial({}, D) : it->second)));
          }
          return rs;
        });
      }
  } else if (id == "eq53") {
    for (int N : Ns)
      for (int nu : nus)
        tasks.push_back([=] { return std::vector{from_report(verify_eq53(N, nu, D))}; });
  } else if (id == "theorem31") {
    for (int N : Ns)
      for (int nu : nus)
        for (int k : ks_for(N, nu, "-4..4"))
          tasks.push_back([=] { return std::vector{theorem_tuple(N, nu, k, args.n_max)}; });
  } else if (id == "roundtrip") {
    for (int n = 0; n <= args.n_max; ++n)
      tasks.push_back([=] { return std::vector{roundtrip_tuple(n, Ns, nus)}; });
  } else {
    throw Error(ErrorKind::Parse, "unknown identity '" + id + "'");
  }
  if (tasks.empty()) throw Error(ErrorKind::Parse, "empty parameter grid");

  bool all_ok = true;
  std::size_t tuples = 0;
  for (const auto& batch : run_pool(tasks))
    for (const auto& r : batch) {
      ++tuples;
      all_ok = all_ok && r.ok;
      if (args.json)
        out << r.record.dump() << '\n';
      else
        out << r.line << '\n';
    }
  if (!args.json)
    out << id << ": " << tuples << " tuples, " << (all_ok ? "all equal" : "MISMATCH") << '\n';
  return all_ok ? kPass : kMismatch;
}

// ---------------------------------------------------------------- render

int cmd_render(const std::string& kind, const std::string& text, bool unicode,
               std::ostream& out) {
  const Glyphs glyphs = unicode ? Glyphs::Unicode : Glyphs::Ascii;
  if (kind == "young") {
    out << render_young(parse_partition(text), glyphs);
  } else if (kind == "residue") {
    out << render_residue(parse_partition(text));
  } else if (kind == "shifted") {
    out << render_shifted(parse_strict_partition(text), glyphs);
  } else if (kind == "blocks") {
    out << render_blocks(parse_strict_partition(text));
  } else {
    throw Error(ErrorKind::Parse, "unknown diagram '" + kind + "'");
  }
  return kPass;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(bool quick, bool inject_fault, std::ostream& out) {
  acceptance::SuiteOptions opts;
  opts.quick = quick;
  if (inject_fault) {
    opts.gaussian = [](int m, int n) {
      QPolynomial g = gaussian_binomial(m, n);
      if (m == 4 && n == 2) g += QPolynomial::monomial(2);
      return g;
    };
  }
  const auto results = acceptance::run_all(
      opts, [&](const acceptance::CriterionResult& r) { out << acceptance::format_line(r) << '\n'; });
  const auto passed =
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  out << "selftest: " << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? kPass : kMismatch;
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto v = parse_int_list(text);
    if (v.empty()) throw Error(ErrorKind::Parse, "empty range");
    return v;
  }
  const auto lo = parse_int_list(text.substr(0, dots));
  const auto hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1)
    throw Error(ErrorKind::Parse, "bad range '" + text + "'");
  if (lo[0] > hi[0]) throw Error(ErrorKind::Parse, "empty range '" + text + "'");
  std::vector<int> out;
  for (int i = lo[0]; i <= hi[0]; ++i) out.push_back(i);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bijections and generating-function checks for strict partitions by BG-rank",
               "bgrank"};
  app.require_subcommand(1);

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Map a strict partition to (t, image)");
  map->add_option("partition", map_args.partition, "Strict partition, e.g. 9,7,5,4,1")->required();
  map->add_option("--box", map_args.box, "N,nu (default: smallest box holding the partition)");
  map->add_flag("--no-conjugate", map_args.no_conjugate,
                "Keep the raw image for positive rank instead of its conjugate");
  map->add_flag("--json", map_args.json, "Emit one JSON object");

  UnmapArgs unmap_args;
  auto* unmap = app.add_subcommand("unmap", "Recover the strict partition from (t, image)");
  unmap->add_option("t", unmap_args.t, "Triangular part 2k^2-k")->required();
  unmap->add_option("partition", unmap_args.partition, "Image partition")->required();
  unmap->add_option("--box", unmap_args.box, "N,nu");
  auto* no_conj = unmap->add_flag("--no-conjugate", unmap_args.no_conjugate,
                                  "Image is the raw (un-conjugated) one");
  unmap->add_flag("--conjugated", unmap_args.conjugated, "Image is the conjugated one")
      ->excludes(no_conj);
  unmap->add_flag("--json", unmap_args.json, "Emit one JSON object");

  std::string rank_text;
  bool rank_json = false;
  auto* rank = app.add_subcommand("rank", "BG-rank, residue counts and characteristic");
  rank->add_option("partition", rank_text, "Partition")->required();
  rank->add_flag("--json", rank_json, "Emit one JSON object");

  GfArgs gf_args;
  auto* gf = app.add_subcommand("gf", "Print a generating function");
  gf->add_option("kind", gf_args.kind, "strict | all | gaussian | pochhammer | inverse")
      ->required();
  gf->add_option("--max-part", gf_args.max_part, "Part bound (strict, all)");
  gf->add_option("--k", gf_args.k, "BG-rank (strict, all)")->allow_extra_args(false);
  gf->add_option("--degree", gf_args.degree, "Truncation degree (all, inverse)");
  gf->add_option("--m", gf_args.m, "Top argument (gaussian)");
  gf->add_option("--n", gf_args.n, "Bottom argument (gaussian)");
  gf->add_option("--L", gf_args.L, "Factor count (pochhammer, inverse; 0 = infinite)");
  gf->add_option("--base", gf_args.base, "Base power (inverse)");
  gf->add_flag("--json", gf_args.json, "Emit JSON");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter grid");
  verify->add_option("identity", verify_args.identity,
                     "eq1 | eq2 | eq3 | eq51 | eq52 | eq53 | theorem31 | roundtrip")
      ->required();
  verify->add_option("--N", verify_args.N, "Range, e.g. 0..5 (default 0..5; 0..6 for theorem31 and roundtrip)");
  verify->add_option("--nu", verify_args.nu, "Values of nu (default 0,1)");
  verify->add_option("--k", verify_args.k,
                     "BG-rank range (default -N-1..N+nu+1 for eq1, -3..3 for eq2/eq51, -4..4 "
                     "for theorem31)");
  verify->add_option("--degree", verify_args.degree, "Truncation degree (default 40)");
  verify->add_option("--n-max", verify_args.n_max, "Largest size n (default 28)");
  verify->add_flag("--json", verify_args.json, "One JSON object per tuple");

  std::string render_kind;
  std::string render_text;
  bool ascii = false;
  bool unicode = false;
  auto* render = app.add_subcommand("render", "Draw a diagram");
  render->add_option("kind", render_kind, "young | shifted | residue | blocks")->required();
  render->add_option("partition", render_text, "Partition")->required();
  auto* ascii_flag = render->add_flag("--ascii", ascii, "Plain ASCII cells (default)");
  render->add_flag("--unicode", unicode, "Unicode cells for young/shifted")->excludes(ascii_flag);

  bool quick = false;
  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_flag("--quick", quick, "Reduced ranges");
  selftest->add_flag("--inject-fault", inject_fault,
                     "Corrupt one Gaussian binomial coefficient to confirm the suite notices");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*map) return cmd_map(map_args, out);
    if (*unmap) return cmd_unmap(unmap_args, out);
    if (*rank) return cmd_rank(rank_text, rank_json, out);
    if (*gf) return cmd_gf(gf_args, out);
    if (*verify) return cmd_verify(verify_args, out);
    if (*render) return cmd_render(render_kind, render_text, unicode, out);
    if (*selftest) return cmd_selftest(quick, inject_fault, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kUsage : kDomain;
  }
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace bgrank::cli
