#pragma once

// Ordinary and strict integer partitions, BG-rank, conjugation and the
// column profile of a shifted Young diagram.
//
// All positional conventions in this header are 1-based: "row j", "part
// at index i". Storage is an ordinary 0-based vector.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bgrank {

/// A non-increasing sequence of positive integers. Construction validates
/// and never reorders.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part at 1-based index j, or 0 past the end.
  int part(int j) const noexcept {
    return j >= 1 && j <= length() ? parts_[static_cast<std::size_t>(j - 1)] : 0;
  }

  bool is_strict() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& lhs, const Partition& rhs) {
    return lhs.parts_ <=> rhs.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A partition into distinct parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  explicit StrictPartition(Partition p);

  const Partition& partition() const noexcept { return p_; }
  operator const Partition&() const noexcept { return p_; }

  std::span<const int> parts() const noexcept { return p_.parts(); }
  int size() const noexcept { return p_.size(); }
  int length() const noexcept { return p_.length(); }
  int largest() const noexcept { return p_.largest(); }
  bool empty() const noexcept { return p_.empty(); }
  int part(int j) const noexcept { return p_.part(j); }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  Partition p_;
};

struct ResidueCount {
  int r0 = 0;
  int r1 = 0;
  friend bool operator==(const ResidueCount&, const ResidueCount&) = default;
};

struct ResidueRank {
  ResidueCount counts;
  int rank = 0;
};

/// Odd parts at odd index minus odd parts at even index.
int bg_rank(const Partition& p);

/// BG-rank read off the 2-residue filling: row j starts with 0 when j is
/// odd and with 1 when j is even, alternating along the row.
ResidueRank bg_rank_residue(const Partition& p);

/// Vandervelde's characteristic, the negated BG-rank.
int characteristic(const Partition& p);

Partition conjugate(const Partition& p);

/// Column lengths c_1..c_{largest} of the shifted diagram, where row j
/// occupies columns j..j+part(j)-1.
std::vector<int> shifted_column_profile(const StrictPartition& d);

/// "9,7,5,4,1" <-> {9,7,5,4,1}. The empty string is the empty sequence.
/// Throws Error(Parse) on malformed input; does not check ordering.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> values);

Partition parse_partition(std::string_view text);
StrictPartition parse_strict_partition(std::string_view text);
inline std::string to_string(const Partition& p) { return format_int_list(p.parts()); }

}  // namespace bgrank
