#pragma once

// The staircase split iota of a strict partition, and the composed maps
// between strict partitions of fixed BG-rank with bounded largest part and
// partitions fitting in a box.

#include <optional>
#include <vector>

#include "bgrank/ab_sequence.hpp"
#include "bgrank/double_cover.hpp"
#include "bgrank/partition.hpp"

namespace bgrank {

/// -2k for k <= 0, 2k-1 for k > 0.
int a_from_k(int k);

/// The integer root of 2k^2 - k = t. Throws NotRepresentable.
int k_from_triangular(long long t);

/// m with m(m+1)/2 = t, or nullopt.
std::optional<int> triangular_root(long long t);

/// Which of the three admissible shapes an iota pair has.
enum class IotaCase {
  StaircaseMatch,  // a(delta) == m
  Descending,      // a(delta) <= m-1 and b(delta) == 1
  Empty,           // delta is the empty sequence
};

std::optional<IotaCase> classify_iota_pair(int m, const ABSequence& delta);

struct IotaImage {
  long long t = 0;
  int m = 0;
  ABSequence delta;
  IotaCase kind = IotaCase::Empty;
};

IotaImage iota(const StrictPartition& d);

/// Prepends columns 1..m to the profile given by delta and reads the rows
/// of the resulting shifted diagram. Throws NotTriangular or
/// NotInIotaImage.
StrictPartition iota_inverse(long long t, const ABSequence& delta);

/// Bounds on the image partition.
struct ImageBounds {
  int largest = 0;  // bound on the largest part
  int length = 0;   // bound on the number of parts
};

struct ParameterBox {
  int N = 0;
  int nu = 0;
  int k = 0;

  int max_part() const noexcept { return 2 * N + nu; }
  /// Box for conjugated (or k <= 0) images: largest <= N+nu-k, length <= N+k.
  /// Un-conjugated images with k > 0 swap the two.
  ImageBounds image_bounds(bool conjugated) const noexcept;
  /// Whether D^{N,nu}_{n,k} can be non-empty: -N <= k <= N+nu.
  bool admissible() const noexcept { return -N <= k && k <= N + nu; }

  friend bool operator==(const ParameterBox&, const ParameterBox&) = default;
};

/// Smallest (N, nu) with 2N+nu >= largest part and -N <= k <= N+nu.
ParameterBox minimal_box(const StrictPartition& d);

struct PsiOptions {
  /// Conjugate the image when k > 0, landing every rank in the same box.
  bool conjugate = true;
};

struct MappedPair {
  long long triangular = 0;
  Partition image;
  int k = 0;
  int m = 0;
  int a_seq = 0;
  bool conjugated = false;
  ABSequence delta;
  BlockCover cover;
  IotaCase kind = IotaCase::Empty;
};

/// Throws RankMismatch, LargestPartExceedsBound; BoundViolation if the
/// image leaves its box.
MappedPair psi_forward(const StrictPartition& d, const ParameterBox& box,
                       PsiOptions opts = {});

/// Forward map in the smallest admissible box.
MappedPair psi_forward(const StrictPartition& d, PsiOptions opts = {});

struct InverseTrace {
  StrictPartition result;
  int k = 0;
  int m = 0;
  int a_seq = 0;
  ABSequence delta;
  BlockCover cover;
  IotaCase kind = IotaCase::Empty;
};

/// Box-free inverse on an un-conjugated image.
InverseTrace psi_inverse_trace(long long t, const Partition& raw_image);

/// Throws ParameterMismatch, NotInImage.
StrictPartition psi_inverse(long long t, const Partition& image, const ParameterBox& box,
                            PsiOptions opts = {});

enum class Orientation {
  NonPositive,  // L = N+nu-k, M = N+k
  Positive,     // L = N+k,    M = N+nu-k
};

struct RecoveredParameters {
  int k = 0;
  int N = 0;
  int nu = 0;
  Orientation orientation = Orientation::NonPositive;
};

/// Solves for (N, nu) from a triangular part and the (largest, length)
/// bounds of an un-conjugated image box. Throws Inconsistent.
RecoveredParameters recover_parameters(long long t, int L, int M);

/// Last occupied block index vs largest(d) - m - 1. Vacuous for an empty tail.
bool check_last_block_bound(const StrictPartition& d);

}  // namespace bgrank
