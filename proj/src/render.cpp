#include "bgrank/render.hpp"

#include <sstream>

#include "bgrank/double_cover.hpp"

namespace bgrank {

namespace {

const char* cell(Glyphs g) { return g == Glyphs::Ascii ? "[]" : "■ "; }
const char* blank() { return "  "; }

char block_letter(int i) {
  if (i <= 26) return static_cast<char>('A' + i - 1);
  if (i <= 52) return static_cast<char>('a' + i - 27);
  return '?';
}

}  // namespace

std::string render_young(const Partition& p, Glyphs glyphs) {
  std::ostringstream os;
  for (int part : p.parts()) {
    for (int c = 0; c < part; ++c) os << cell(glyphs);
    os << '\n';
  }
  return os.str();
}

std::string render_shifted(const StrictPartition& d, Glyphs glyphs) {
  std::ostringstream os;
  for (int j = 1; j <= d.length(); ++j) {
    for (int c = 1; c < j; ++c) os << blank();
    for (int c = 0; c < d.part(j); ++c) os << cell(glyphs);
    os << '\n';
  }
  return os.str();
}

std::string render_residue(const Partition& p) {
  std::ostringstream os;
  for (int j = 1; j <= p.length(); ++j) {
    const int first = (j % 2 == 1) ? 0 : 1;
    for (int c = 0; c < p.part(j); ++c) os << '[' << (first + c) % 2 << ']';
    os << '\n';
  }
  const auto rr = bg_rank_residue(p);
  os << "r0=" << rr.counts.r0 << " r1=" << rr.counts.r1 << " BG=" << rr.rank << '\n';
  return os.str();
}

std::string render_cover(const BlockCover& cover) {
  std::ostringstream os;
  const Partition shape = assemble(cover);
  for (int row = 1; row <= shape.length(); ++row) {
    for (int col = 1; col <= shape.part(row); ++col)
      os << '[' << block_letter(block_of_cell(cover.a, row, col)) << ']';
    os << '\n';
  }
  for (int i = 1; i <= cover.last_index(); ++i) {
    os << 'B' << i << " (" << block_letter(i) << "): b=" << cover.at(i)
       << " n=" << block_capacity(cover.a, i) << '\n';
  }
  return os.str();
}

std::string render_blocks(const StrictPartition& d) {
  const MappedPair mp = psi_forward(d, PsiOptions{false});
  std::ostringstream os;
  os << "a=" << mp.a_seq << " t=" << mp.triangular << " image=(" << to_string(mp.image) << ")\n";
  os << render_cover(mp.cover);
  return os.str();
}

}  // namespace bgrank
