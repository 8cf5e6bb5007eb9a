#pragma once

// Brute-force partition streams. These are the independent oracles the
// bijection and series code is checked against, so they share no logic
// with either.

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "bgrank/partition.hpp"

namespace bgrank {

struct EnumSpec {
  int n = 0;
  std::optional<int> max_part;
  std::optional<int> max_len;
  bool strict = false;
  std::optional<int> rank;  // BG-rank filter, applied after generation
};

/// Restartable stream over the partitions matching a spec, in decreasing
/// lexicographic order of part sequences. Each begin() starts afresh and
/// holds only the current partition.
class PartitionStream {
 public:
  explicit PartitionStream(EnumSpec spec) : spec_(spec) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& lhs, const iterator& rhs) {
      return lhs.done_ == rhs.done_;
    }

   private:
    friend class PartitionStream;
    explicit iterator(const EnumSpec& spec);

    bool advance_raw();
    bool complete_from(std::size_t pos, int remaining, int cap);
    void skip_filtered();

    EnumSpec spec_;
    std::vector<int> parts_;
    Partition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(spec_); }
  iterator end() const { return iterator(); }

 private:
  EnumSpec spec_;
};

inline PartitionStream enumerate(const EnumSpec& spec) { return PartitionStream(spec); }

long long count(const EnumSpec& spec);

/// Strict partitions of n with BG-rank k and largest part <= 2N+nu.
long long count_strict_bounded(int n, int k, int N, int nu);

/// Partitions of n with largest part <= L and at most M parts; 0 for
/// negative n, L or M.
long long count_box(int n, int L, int M);

}  // namespace bgrank
