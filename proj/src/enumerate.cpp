#include "bgrank/enumerate.hpp"

#include <algorithm>

namespace bgrank {

namespace {

// Largest sum of at most `slots` distinct parts no bigger than `cap`.
long long strict_capacity(int cap, int slots) {
  const long long s = std::min(cap, slots);
  return s * cap - s * (s - 1) / 2;
}

bool fillable(int remaining, int cap, int slots, bool strict) {
  if (remaining == 0) return true;
  if (cap <= 0 || slots <= 0) return false;
  if (strict) return remaining <= strict_capacity(cap, slots);
  return static_cast<long long>(remaining) <= static_cast<long long>(cap) * slots;
}

}  // namespace

PartitionStream::iterator::iterator(const EnumSpec& spec) : spec_(spec), done_(false) {
  if (spec_.n < 0) {
    done_ = true;
    return;
  }
  const int cap = spec_.max_part.value_or(spec_.n);
  if (!complete_from(0, spec_.n, cap)) {
    done_ = true;
    return;
  }
  skip_filtered();
}

// Writes the lexicographically largest completion of `remaining` using
// parts <= cap into positions pos.. and reports whether one exists.
bool PartitionStream::iterator::complete_from(std::size_t pos, int remaining, int cap) {
  const int max_len = spec_.max_len.value_or(spec_.n);
  const int slots = max_len - static_cast<int>(pos);
  if (!fillable(remaining, cap, slots, spec_.strict)) return false;
  parts_.resize(pos);
  while (remaining > 0) {
    const int part = std::min(cap, remaining);
    parts_.push_back(part);
    remaining -= part;
    cap = spec_.strict ? part - 1 : part;
  }
  return true;
}

bool PartitionStream::iterator::advance_raw() {
  int prefix = 0;
  for (int p : parts_) prefix += p;
  for (std::size_t j = parts_.size(); j-- > 0;) {
    prefix -= parts_[j];
    const int v = parts_[j] - 1;
    if (v < 1) continue;
    const std::vector<int> saved = parts_;
    parts_.resize(j);
    parts_.push_back(v);
    if (complete_from(j + 1, spec_.n - prefix - v, spec_.strict ? v - 1 : v)) return true;
    parts_ = saved;
  }
  return false;
}

void PartitionStream::iterator::skip_filtered() {
  while (true) {
    current_ = Partition(parts_);
    if (!spec_.rank || bg_rank(current_) == *spec_.rank) return;
    if (!advance_raw()) {
      done_ = true;
      return;
    }
  }
}

PartitionStream::iterator& PartitionStream::iterator::operator++() {
  if (done_) return *this;
  if (!advance_raw()) {
    done_ = true;
    return *this;
  }
  skip_filtered();
  return *this;
}

long long count(const EnumSpec& spec) {
  long long c = 0;
  for (const auto& p : enumerate(spec)) {
    (void)p;
    ++c;
  }
  return c;
}

long long count_strict_bounded(int n, int k, int N, int nu) {
  if (N < 0) return 0;
  return count(EnumSpec{n, 2 * N + nu, std::nullopt, true, k});
}

long long count_box(int n, int L, int M) {
  if (n < 0 || L < 0 || M < 0) return 0;
  return count(EnumSpec{n, L, M, false, std::nullopt});
}

}  // namespace bgrank
