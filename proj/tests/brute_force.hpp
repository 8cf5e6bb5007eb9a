#pragma once

// Test-only oracles. Deliberately naive and independent of the library's
// own enumerators and formulas.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace brute {

using Parts = std::vector<int>;

inline void all_partitions_rec(int n, int cap, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, cap); p >= 1; --p) {
    cur.push_back(p);
    all_partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

/// Every partition of n.
inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  all_partitions_rec(n, n, cur, out);
  return out;
}

/// Strict partitions with parts <= max_part, by subset enumeration.
inline std::vector<Parts> strict_subsets(int max_part) {
  std::vector<Parts> out;
  for (unsigned mask = 0; mask < (1u << max_part); ++mask) {
    Parts p;
    for (int v = max_part; v >= 1; --v)
      if (mask >> (v - 1) & 1u) p.push_back(v);
    out.push_back(p);
  }
  return out;
}

inline bool is_strict(const Parts& p) {
  return std::adjacent_find(p.begin(), p.end()) == p.end();
}

inline int sum(const Parts& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

/// BG-rank straight from its definition, 1-based positions.
inline int bg_rank(const Parts& p) {
  int odd_at_odd = 0;
  int odd_at_even = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] % 2 == 0) continue;
    if ((i + 1) % 2 == 1)
      ++odd_at_odd;
    else
      ++odd_at_even;
  }
  return odd_at_odd - odd_at_even;
}

/// Conjugate by transposing the cell set {(row, col)}.
inline Parts transpose(const Parts& p) {
  std::set<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) cells.insert({c, static_cast<int>(r)});
  Parts out;
  for (const auto& [row, col] : cells) {
    if (static_cast<int>(out.size()) <= row) out.resize(static_cast<std::size_t>(row) + 1, 0);
    ++out[static_cast<std::size_t>(row)];
    (void)col;
  }
  return out;
}

/// Number of partitions of j with at most `rows` parts, each at most `cols`.
inline long long box_count(int j, int rows, int cols) {
  long long c = 0;
  for (const auto& p : partitions(j))
    if (static_cast<int>(p.size()) <= rows && (p.empty() || p.front() <= cols)) ++c;
  return c;
}

}  // namespace brute
