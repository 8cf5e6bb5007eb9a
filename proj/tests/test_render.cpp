#include "bgrank/render.hpp"

#include "doctest.h"

using namespace bgrank;

TEST_CASE("young and shifted diagrams") {
  CHECK(render_young(Partition({3, 1})) == "[][][]\n[]\n");
  CHECK(render_young(Partition()) == "");
  CHECK(render_shifted(StrictPartition({3, 1})) == "[][][]\n  []\n");
  CHECK(render_young(Partition({2, 1}), Glyphs::Unicode) == "■ ■ \n■ \n");
}

TEST_CASE("residue filling") {
  CHECK(render_residue(Partition({3, 1})) == "[0][1][0]\n[1]\nr0=2 r1=2 BG=0\n");
  const auto text = render_residue(Partition({10, 7, 4, 2}));
  CHECK(text.find("r0=11 r1=12 BG=-1") != std::string::npos);
}

TEST_CASE("block decomposition") {
  CHECK(render_blocks(StrictPartition({9, 7, 5, 4, 1})) ==
        "a=3 t=6 image=(6,3,1)\n"
        "[A][A][A][A][B][D]\n"
        "[C][C][C]\n"
        "[E]\n"
        "B1 (A): b=4 n=4\n"
        "B2 (B): b=1 n=1\n"
        "B3 (C): b=3 n=5\n"
        "B4 (D): b=1 n=2\n"
        "B5 (E): b=1 n=6\n");

  // Cell letters agree with the counts per block.
  const BlockCover cover{2, {3, 1, 4, 1, 3, 0, 2, 0, 2}};
  const auto text = render_cover(cover);
  for (int i = 1; i <= cover.last_index(); ++i) {
    const std::string cell = std::string("[") + static_cast<char>('A' + i - 1) + "]";
    int hits = 0;
    for (auto pos = text.find(cell); pos != std::string::npos; pos = text.find(cell, pos + 1))
      ++hits;
    CHECK(hits == cover.at(i));
  }
}
