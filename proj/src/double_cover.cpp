#include "bgrank/double_cover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bgrank/error.hpp"

namespace bgrank {

int block_capacity(int a, int i) { return (i % 2 == 1) ? a + (i + 1) / 2 : i / 2; }

int BlockCover::last_index() const noexcept {
  for (int i = static_cast<int>(covered.size()); i >= 1; --i)
    if (covered[static_cast<std::size_t>(i - 1)] > 0) return i;
  return 0;
}

int BlockCover::total() const noexcept {
  return std::accumulate(covered.begin(), covered.end(), 0);
}

BlockCover double_cover(int a, const ABSequence& delta) {
  if (a < 0) throw Error(ErrorKind::ParameterMismatch, "negative a");
  BlockCover cover{a, {}};
  if (delta.empty()) return cover;
  if (delta.a() != a)
    throw Error(ErrorKind::ParameterMismatch, "sequence has a=" + std::to_string(delta.a()) +
                                                  ", expected a=" + std::to_string(a));
  int prev = 0;
  for (int i = 1; i <= delta.length(); ++i) {
    const int b = delta.at(i) - prev;
    if (b < 0)
      throw Error(ErrorKind::CoverUnderflow,
                  "b_" + std::to_string(i) + " = " + std::to_string(b));
    if (b > block_capacity(a, i))
      throw Error(ErrorKind::CoverOverflow, "b_" + std::to_string(i) + " = " + std::to_string(b) +
                                                " exceeds n_" + std::to_string(i) + " = " +
                                                std::to_string(block_capacity(a, i)));
    cover.covered.push_back(b);
    prev = b;
  }
  if (prev != 0)
    throw Error(ErrorKind::IncompleteCover,
                "b_" + std::to_string(delta.length()) + " = " + std::to_string(prev));
  while (!cover.covered.empty() && cover.covered.back() == 0) cover.covered.pop_back();
  return cover;
}

int block_of_cell(int a, int row, int col) {
  if (col <= a + row) return 2 * row - 1;
  return 2 * (col - a - 1);
}

Partition assemble(const BlockCover& cover) {
  const int a = cover.a;
  const int last = cover.last_index();
  const int rows = (last + 1) / 2;
  const int cols = a + 1 + last;
  // cells[r][c] for 1-based r, c.
  std::vector<std::vector<char>> cells(static_cast<std::size_t>(rows + 2),
                                       std::vector<char>(static_cast<std::size_t>(cols + 2), 0));
  for (int i = 1; i <= last; ++i) {
    const int b = cover.at(i);
    if (i % 2 == 1) {
      const int row = (i + 1) / 2;
      for (int c = 1; c <= b; ++c) cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = 1;
    } else {
      const int col = a + i / 2 + 1;
      for (int r = 1; r <= b; ++r) cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 1;
    }
  }
  std::vector<int> parts;
  for (int r = 1; r <= rows; ++r) {
    const auto& line = cells[static_cast<std::size_t>(r)];
    int len = 0;
    while (len + 1 <= cols && line[static_cast<std::size_t>(len + 1)]) ++len;
    for (int c = len + 1; c <= cols; ++c)
      if (line[static_cast<std::size_t>(c)])
        throw Error(ErrorKind::NotAPartitionShape,
                    "row " + std::to_string(r) + " has a gap before column " + std::to_string(c));
    if (len == 0) {
      for (int r2 = r + 1; r2 <= rows; ++r2)
        for (int c = 1; c <= cols; ++c)
          if (cells[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c)])
            throw Error(ErrorKind::NotAPartitionShape,
                        "row " + std::to_string(r) + " is empty but row " + std::to_string(r2) +
                            " is not");
      break;
    }
    if (!parts.empty() && len > parts.back())
      throw Error(ErrorKind::NotAPartitionShape,
                  "row " + std::to_string(r) + " is longer than the row above");
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

Partition phi(int a, const ABSequence& delta) { return assemble(double_cover(a, delta)); }

BlockCover read_cover(int a, const Partition& lambda) {
  BlockCover cover{a, {}};
  if (lambda.empty()) return cover;
  // Odd blocks reach row length(); even blocks reach column largest().
  const int odd_max = 2 * lambda.length() - 1;
  const int even_max = 2 * std::max(0, lambda.largest() - a - 1);
  const int top = std::max(odd_max, even_max);
  for (int i = 1; i <= top; ++i) {
    int b = 0;
    if (i % 2 == 1) {
      const int row = (i + 1) / 2;
      b = std::min(lambda.part(row), a + row);
    } else {
      const int m = i / 2;
      for (int r = 1; r <= m; ++r)
        if (lambda.part(r) >= a + m + 1) ++b;
    }
    cover.covered.push_back(b);
  }
  while (!cover.covered.empty() && cover.covered.back() == 0) cover.covered.pop_back();
  return cover;
}

ABSequence phi_inverse(int a, const Partition& lambda) {
  if (lambda.empty()) return {};
  const BlockCover cover = read_cover(a, lambda);
  const int last = cover.last_index();
  std::vector<int> d;
  for (int i = 1; i <= last + 1; ++i) d.push_back(cover.at(i - 1) + cover.at(i));
  ABSequence delta;
  try {
    delta = ABSequence::validate(d);
    if (delta.a() != a)
      throw Error(ErrorKind::ParameterMismatch, "d_1 = " + std::to_string(d.front()) +
                                                    " but a + 1 = " + std::to_string(a + 1));
    if (phi(a, delta) != lambda)
      throw Error(ErrorKind::NotInImage, "round trip through phi does not reproduce the input");
  } catch (const Error& e) {
    throw Error(ErrorKind::NotInImage,
                "(" + to_string(lambda) + ") under a=" + std::to_string(a) + ": " + e.what());
  }
  return delta;
}

int durfee_rectangle(const Partition& lambda, int a) {
  int i = 0;
  while (lambda.part(i + 1) >= i + 1 + a) ++i;
  return i;
}

bool in_class(const Partition& lambda, BoxPartitionClass cls) {
  if (cls.b < 1 || cls.a < 0) return false;
  const int h = (cls.b + 1) / 2;
  if (durfee_rectangle(lambda, cls.a) != h) return false;
  if (cls.b % 2 == 0) return lambda.part(h) > cls.a + h;
  return lambda.part(h) == cls.a + h;
}

}  // namespace bgrank
