#pragma once

#include <string>

#include "bgrank/composed.hpp"
#include "bgrank/partition.hpp"

namespace bgrank {

enum class Glyphs { Ascii, Unicode };

/// Ferrers diagram, one "[]" per cell.
std::string render_young(const Partition& p, Glyphs glyphs = Glyphs::Ascii);

/// Shifted diagram: row j indented by j-1 cells.
std::string render_shifted(const StrictPartition& d, Glyphs glyphs = Glyphs::Ascii);

/// 2-residue filling, "[0]"/"[1]" cells, followed by the r0/r1 tally.
std::string render_residue(const Partition& p);

/// Block decomposition of the un-conjugated image of d: each cell carries
/// the letter of its block (A = B1, B = B2, ...), then one legend line per
/// block with b_i and the capacity n_i.
std::string render_blocks(const StrictPartition& d);

/// Same, for a cover already computed.
std::string render_cover(const BlockCover& cover);

}  // namespace bgrank
