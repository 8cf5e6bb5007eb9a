#include "bgrank/partition.hpp"

#include <charconv>
#include <numeric>
#include <utility>

#include "bgrank/error.hpp"

namespace bgrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw Error(ErrorKind::InvalidPartition,
                  "part " + std::to_string(parts_[i]) + " is not positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::InvalidPartition,
                  "parts are not non-increasing at index " + std::to_string(i + 1));
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const noexcept {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

StrictPartition::StrictPartition(std::vector<int> parts)
    : StrictPartition(Partition(std::move(parts))) {}

StrictPartition::StrictPartition(Partition p) : p_(std::move(p)) {
  if (!p_.is_strict())
    throw Error(ErrorKind::NotStrict, "repeated part in " + to_string(p_));
}

int bg_rank(const Partition& p) {
  int rank = 0;
  for (int j = 1; j <= p.length(); ++j) {
    if (p.part(j) % 2 == 0) continue;
    rank += (j % 2 == 1) ? 1 : -1;
  }
  return rank;
}

ResidueRank bg_rank_residue(const Partition& p) {
  ResidueRank out;
  for (int j = 1; j <= p.length(); ++j) {
    const int first = (j % 2 == 1) ? 0 : 1;
    for (int col = 0; col < p.part(j); ++col) {
      if ((first + col) % 2 == 0)
        ++out.counts.r0;
      else
        ++out.counts.r1;
    }
  }
  out.rank = out.counts.r0 - out.counts.r1;
  return out;
}

int characteristic(const Partition& p) { return -bg_rank(p); }

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

std::vector<int> shifted_column_profile(const StrictPartition& d) {
  std::vector<int> cols(static_cast<std::size_t>(d.largest()), 0);
  for (int j = 1; j <= d.length(); ++j) {
    // Row j covers columns j .. j + part(j) - 1; strictness keeps that
    // inside 1..largest.
    for (int c = j; c < j + d.part(j); ++c) ++cols[static_cast<std::size_t>(c - 1)];
  }
  return cols;
}

std::vector<int> parse_int_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> out;
  if (text.empty()) return out;
  // Tolerate the "(9,7,5)" and "{9,7,5}" spellings.
  if ((text.front() == '(' && text.back() == ')') ||
      (text.front() == '{' && text.back() == '}')) {
    text = trim(text.substr(1, text.size() - 2));
    if (text.empty()) return out;
  }
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end)
      throw Error(ErrorKind::Parse, "bad integer '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::string format_int_list(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

StrictPartition parse_strict_partition(std::string_view text) {
  return StrictPartition(parse_int_list(text));
}

}  // namespace bgrank
