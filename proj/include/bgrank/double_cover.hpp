#pragma once

// The double-cover map phi_a from (a,b)-sequences to partitions whose
// a-Durfee rectangle has a prescribed size, and its inverse.
//
// Block layout, 1-based rows and columns:
//   odd block  B_{2j-1}: row j, columns 1 .. a+j, filled left to right
//   even block B_{2m}  : column a+m+1, rows 1 .. m, filled top to bottom
// Every cell of the quadrant lies in exactly one block.

#include <vector>

#include "bgrank/ab_sequence.hpp"
#include "bgrank/partition.hpp"

namespace bgrank {

/// Number of cells n_i of block B_i.
int block_capacity(int a, int i);

/// Doubly covered cell counts b_1, b_2, ... per block.
struct BlockCover {
  int a = 0;
  std::vector<int> covered;

  /// b_i for 1-based i, 0 past the end.
  int at(int i) const noexcept {
    return i >= 1 && i <= static_cast<int>(covered.size())
               ? covered[static_cast<std::size_t>(i - 1)]
               : 0;
  }
  /// Largest i with b_i > 0, or 0.
  int last_index() const noexcept;
  int total() const noexcept;

  friend bool operator==(const BlockCover&, const BlockCover&) = default;
};

/// Runs b_0 = 0, b_i = d_i - b_{i-1}, checking each b_i against 0 and n_i
/// and requiring b_l = 0. Requires delta.a() == a for non-empty delta.
BlockCover double_cover(int a, const ABSequence& delta);

/// Lays the covered cells out per block and reads the rows. Throws
/// NotAPartitionShape when the cells are not a Young diagram.
Partition assemble(const BlockCover& cover);

/// Which block owns cell (row, col), both 1-based.
int block_of_cell(int a, int row, int col);

Partition phi(int a, const ABSequence& delta);

/// Reads b_i back off a Young diagram.
BlockCover read_cover(int a, const Partition& lambda);

/// Inverse of phi. The reconstructed sequence is validated and pushed
/// back through phi; any failure is NotInImage.
ABSequence phi_inverse(int a, const Partition& lambda);

struct BoxPartitionClass {
  int a = 0;
  int b = 1;
};

/// Largest i such that an i x (i+a) rectangle fits in the diagram.
int durfee_rectangle(const Partition& lambda, int a);

/// Membership in P_{a,b}.
bool in_class(const Partition& lambda, BoxPartitionClass cls);

}  // namespace bgrank
