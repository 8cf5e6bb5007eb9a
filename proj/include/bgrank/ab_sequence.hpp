#pragma once

#include <span>
#include <vector>

namespace bgrank {

/// A positive sequence d_1..d_l with a staircase prefix d_i = a + i for
/// i <= b, non-increasing from index b on, and alternating sum zero.
/// The default value is the empty sequence (l = 0), for which a() and b()
/// are both reported as 0.
class ABSequence {
 public:
  ABSequence() = default;

  /// Throws Error(NotABSequence) unless `entries` is a non-empty
  /// (a,b)-sequence. a = d_1 - 1 and b is the length of the staircase
  /// prefix, which is the only index that can satisfy both shape rules.
  static ABSequence validate(std::vector<int> entries);

  std::span<const int> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  int length() const noexcept { return static_cast<int>(entries_.size()); }
  int weight() const noexcept { return weight_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  /// 1-based entry, 0 past the end.
  int at(int i) const noexcept {
    return i >= 1 && i <= length() ? entries_[static_cast<std::size_t>(i - 1)] : 0;
  }

  friend bool operator==(const ABSequence&, const ABSequence&) = default;

 private:
  std::vector<int> entries_;
  int a_ = 0;
  int b_ = 0;
  int weight_ = 0;
};

/// sum_{i=1}^{l} (-1)^i d_i.
long long alt_sum(std::span<const int> entries);

struct SplitResult {
  int m = 0;
  int staircase_weight = 0;  // m(m+1)/2
  ABSequence tail;
};

/// Finds the prefix length m in [0, r] whose partial alternating sum
/// matches the total. Every m is scanned: no match is NoSplit, more than
/// one is AmbiguousSplit.
SplitResult split_point(std::span<const int> profile, int r);

}  // namespace bgrank
