#include "bgrank/ab_sequence.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "bgrank/error.hpp"
#include "bgrank/partition.hpp"

namespace bgrank {

ABSequence ABSequence::validate(std::vector<int> entries) {
  if (entries.empty()) throw Error(ErrorKind::NotABSequence, "empty sequence");
  for (int d : entries)
    if (d < 1)
      throw Error(ErrorKind::NotABSequence,
                  "entry " + std::to_string(d) + " is not positive");
  const int a = entries.front() - 1;
  int b = 1;
  while (b < static_cast<int>(entries.size()) && entries[static_cast<std::size_t>(b)] == a + b + 1)
    ++b;
  for (std::size_t i = static_cast<std::size_t>(b); i < entries.size(); ++i) {
    if (entries[i] > entries[i - 1])
      throw Error(ErrorKind::NotABSequence,
                  "(" + format_int_list(entries) + ") rises after its staircase prefix");
  }
  if (alt_sum(entries) != 0)
    throw Error(ErrorKind::NotABSequence,
                "(" + format_int_list(entries) + ") has non-zero alternating sum");

  ABSequence out;
  out.weight_ = std::accumulate(entries.begin(), entries.end(), 0);
  out.entries_ = std::move(entries);
  out.a_ = a;
  out.b_ = b;
  return out;
}

long long alt_sum(std::span<const int> entries) {
  long long s = 0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    s += (i % 2 == 0) ? -entries[i] : entries[i];
  return s;
}

SplitResult split_point(std::span<const int> profile, int r) {
  if (r < 0 || r > static_cast<int>(profile.size()))
    throw Error(ErrorKind::NoSplit, "part count " + std::to_string(r) + " out of range");
  const long long total = alt_sum(profile);
  long long partial = 0;
  int found = -1;
  for (int m = 0; m <= r; ++m) {
    if (m > 0) partial += (m % 2 == 1) ? -profile[static_cast<std::size_t>(m - 1)]
                                       : profile[static_cast<std::size_t>(m - 1)];
    if (partial != total) continue;
    if (found >= 0)
      throw Error(ErrorKind::AmbiguousSplit, "split at both m=" + std::to_string(found) +
                                                 " and m=" + std::to_string(m));
    found = m;
  }
  if (found < 0) throw Error(ErrorKind::NoSplit, "no prefix matches the alternating sum");

  SplitResult out;
  out.m = found;
  out.staircase_weight = found * (found + 1) / 2;
  if (found < static_cast<int>(profile.size())) {
    try {
      out.tail = ABSequence::validate(
          std::vector<int>(profile.begin() + found, profile.end()));
    } catch (const Error& e) {
      throw Error(ErrorKind::NoSplit, std::string("tail is not an (a,b)-sequence: ") + e.what());
    }
  }
  return out;
}

}  // namespace bgrank
