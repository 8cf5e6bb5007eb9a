#include "bgrank/composed.hpp"

#include <cmath>
#include <string>

#include "bgrank/error.hpp"

namespace bgrank {

int a_from_k(int k) { return k <= 0 ? -2 * k : 2 * k - 1; }

std::optional<int> triangular_root(long long t) {
  if (t < 0) return std::nullopt;
  auto m = static_cast<long long>(std::sqrt(2.0 * static_cast<double>(t)));
  while (m * (m + 1) / 2 > t) --m;
  while ((m + 1) * (m + 2) / 2 <= t) ++m;
  if (m * (m + 1) / 2 != t) return std::nullopt;
  return static_cast<int>(m);
}

int k_from_triangular(long long t) {
  const auto m = triangular_root(t);
  if (!m)
    throw Error(ErrorKind::NotRepresentable, std::to_string(t) + " is not triangular");
  // T_m = 2k^2 - k with k = -m/2 for even m and (m+1)/2 for odd m.
  const int k = (*m % 2 == 0) ? -(*m / 2) : (*m + 1) / 2;
  if (2LL * k * k - k != t)
    throw Error(ErrorKind::NotRepresentable, std::to_string(t) + " has no integer root");
  return k;
}

std::optional<IotaCase> classify_iota_pair(int m, const ABSequence& delta) {
  if (delta.empty()) return IotaCase::Empty;
  if (delta.a() == m) return IotaCase::StaircaseMatch;
  if (delta.a() <= m - 1 && delta.b() == 1) return IotaCase::Descending;
  return std::nullopt;
}

IotaImage iota(const StrictPartition& d) {
  const auto profile = shifted_column_profile(d);
  SplitResult split = split_point(profile, d.length());
  const auto kind = classify_iota_pair(split.m, split.tail);
  if (!kind)
    throw Error(ErrorKind::AmbiguousSplit,
                "tail of (" + to_string(d.partition()) + ") fits no admissible shape");
  return IotaImage{split.staircase_weight, split.m, std::move(split.tail), *kind};
}

StrictPartition iota_inverse(long long t, const ABSequence& delta) {
  const auto root = triangular_root(t);
  if (!root) throw Error(ErrorKind::NotTriangular, std::to_string(t) + " is not triangular");
  const int m = *root;
  if (!classify_iota_pair(m, delta))
    throw Error(ErrorKind::NotInIotaImage,
                "a=" + std::to_string(delta.a()) + ", b=" + std::to_string(delta.b()) +
                    " with m=" + std::to_string(m));

  std::vector<int> heights;
  for (int i = 1; i <= m; ++i) heights.push_back(i);
  for (int d : delta.entries()) heights.push_back(d);

  const int width = static_cast<int>(heights.size());
  std::vector<int> parts;
  for (int row = 1; row <= width; ++row) {
    if (heights[static_cast<std::size_t>(row - 1)] < row) break;
    int len = 0;
    for (int c = row; c <= width; ++c)
      if (heights[static_cast<std::size_t>(c - 1)] >= row) ++len;
    parts.push_back(len);
  }

  StrictPartition out;
  try {
    out = StrictPartition(parts);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotInIotaImage, e.what());
  }
  if (shifted_column_profile(out) != heights)
    throw Error(ErrorKind::NotInIotaImage,
                "columns (" + format_int_list(heights) + ") are not a shifted diagram");
  return out;
}

ImageBounds ParameterBox::image_bounds(bool conjugated) const noexcept {
  if (k <= 0 || conjugated) return {N + nu - k, N + k};
  return {N + k, N + nu - k};
}

ParameterBox minimal_box(const StrictPartition& d) {
  const int k = bg_rank(d.partition());
  for (int s = d.largest();; ++s) {
    ParameterBox box{s / 2, s % 2, k};
    if (box.admissible()) return box;
  }
}

namespace {

void check_box_shape(const ParameterBox& box) {
  if (box.N < 0 || (box.nu != 0 && box.nu != 1))
    throw Error(ErrorKind::ParameterMismatch, "box needs N >= 0 and nu in {0,1}");
}

}  // namespace

MappedPair psi_forward(const StrictPartition& d, const ParameterBox& box, PsiOptions opts) {
  check_box_shape(box);
  const int k = bg_rank(d.partition());
  if (k != box.k)
    throw Error(ErrorKind::RankMismatch,
                "BG-rank is " + std::to_string(k) + ", box expects " + std::to_string(box.k));
  if (d.largest() > box.max_part())
    throw Error(ErrorKind::LargestPartExceedsBound,
                "largest part " + std::to_string(d.largest()) + " > 2N+nu = " +
                    std::to_string(box.max_part()));

  IotaImage split = iota(d);
  MappedPair out;
  out.triangular = split.t;
  out.k = k;
  out.m = split.m;
  out.kind = split.kind;
  out.a_seq = split.delta.empty() ? split.m : split.delta.a();
  out.cover = double_cover(out.a_seq, split.delta);
  out.delta = std::move(split.delta);
  Partition raw = assemble(out.cover);
  out.conjugated = opts.conjugate && k > 0;
  out.image = out.conjugated ? conjugate(raw) : std::move(raw);

  const ImageBounds bounds = box.image_bounds(out.conjugated);
  if (out.image.largest() > bounds.largest || out.image.length() > bounds.length)
    throw Error(ErrorKind::BoundViolation,
                "image (" + to_string(out.image) + ") leaves the " +
                    std::to_string(bounds.largest) + "x" + std::to_string(bounds.length) +
                    " box");
  return out;
}

MappedPair psi_forward(const StrictPartition& d, PsiOptions opts) {
  return psi_forward(d, minimal_box(d), opts);
}

InverseTrace psi_inverse_trace(long long t, const Partition& raw_image) {
  int k = 0;
  try {
    k = k_from_triangular(t);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParameterMismatch, e.what());
  }
  InverseTrace out;
  out.k = k;
  out.m = a_from_k(k);
  if (raw_image.empty()) {
    out.a_seq = out.m;
  } else {
    try {
      out.delta = phi_inverse(out.m, raw_image);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInImage) throw;
      // Only a descending tail remains possible; its first column is the
      // whole first row.
      const int a = raw_image.largest() - 1;
      if (a > out.m - 1)
        throw Error(ErrorKind::NotInImage,
                    "(" + to_string(raw_image) + ") is not an image for t=" + std::to_string(t));
      out.delta = phi_inverse(a, raw_image);
    }
    out.a_seq = out.delta.a();
  }
  out.cover = double_cover(out.a_seq, out.delta);
  out.kind = *classify_iota_pair(out.m, out.delta);
  try {
    out.result = iota_inverse(t, out.delta);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotInImage, e.what());
  }
  return out;
}

StrictPartition psi_inverse(long long t, const Partition& image, const ParameterBox& box,
                            PsiOptions opts) {
  check_box_shape(box);
  int k = 0;
  try {
    k = k_from_triangular(t);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParameterMismatch, e.what());
  }
  if (k != box.k)
    throw Error(ErrorKind::ParameterMismatch,
                "t=" + std::to_string(t) + " gives k=" + std::to_string(k) + ", box has k=" +
                    std::to_string(box.k));
  const bool conjugated = opts.conjugate && k > 0;
  const ImageBounds bounds = box.image_bounds(conjugated);
  if (image.largest() > bounds.largest || image.length() > bounds.length)
    throw Error(ErrorKind::NotInImage, "(" + to_string(image) + ") does not fit the " +
                                           std::to_string(bounds.largest) + "x" +
                                           std::to_string(bounds.length) + " box");

  InverseTrace trace = psi_inverse_trace(t, conjugated ? conjugate(image) : image);
  if (trace.result.largest() > box.max_part())
    throw Error(ErrorKind::BoundViolation,
                "preimage largest part " + std::to_string(trace.result.largest()) +
                    " > 2N+nu = " + std::to_string(box.max_part()));
  if (bg_rank(trace.result.partition()) != k)
    throw Error(ErrorKind::RankMismatch, "preimage has the wrong BG-rank");
  return trace.result;
}

RecoveredParameters recover_parameters(long long t, int L, int M) {
  RecoveredParameters out;
  try {
    out.k = k_from_triangular(t);
  } catch (const Error& e) {
    throw Error(ErrorKind::Inconsistent, e.what());
  }
  const int k = out.k;
  if (k <= 0) {
    out.orientation = Orientation::NonPositive;
    out.N = M - k;
    out.nu = L - out.N + k;
  } else {
    out.orientation = Orientation::Positive;
    out.N = L - k;
    out.nu = M - out.N + k;
  }
  if (out.N < 0 || (out.nu != 0 && out.nu != 1))
    throw Error(ErrorKind::Inconsistent, "no N >= 0, nu in {0,1} gives L=" + std::to_string(L) +
                                             ", M=" + std::to_string(M) +
                                             " at k=" + std::to_string(k));
  return out;
}

bool check_last_block_bound(const StrictPartition& d) {
  const IotaImage split = iota(d);
  if (split.delta.empty()) return true;
  const BlockCover cover = double_cover(split.delta.a(), split.delta);
  return cover.last_index() <= d.largest() - split.m - 1;
}

}  // namespace bgrank
