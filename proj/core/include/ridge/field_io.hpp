#pragma once

#include <string>
#include <string_view>

#include "ridge/direction.hpp"
#include "ridge/orientation.hpp"

namespace ridge {

/// Text export of a block direction image.
///
///     # ridge-field rows=16 cols=16 block=16 directions=16
///     0 0 4 45 1
///     0 1 0 0 0
///
/// One line per block in row-major order: `row col d angle_degrees valid`.
std::string format_field_text(const BlockDirectionImage& field, const DirectionSet& dirs);

struct ParsedField {
    BlockDirectionImage field;
    std::size_t directions = 0;
};

/// Inverse of format_field_text. Throws std::runtime_error on malformed input.
ParsedField parse_field_text(std::string_view text);

/// Binary dump: two 4-bit indices per byte, first block in the high nibble,
/// row-major. Invalid blocks are written as 0xF; an odd trailing nibble is
/// padded with 0xF. The mask holds one byte per block (1 valid, 0 invalid),
/// needed because 0xF is also a legal index when N = 16.
struct PackedField {
    std::string indices;
    std::string mask;
};

/// Throws std::invalid_argument if any valid index does not fit in 4 bits.
PackedField pack_field(const BlockDirectionImage& field);

/// Throws std::runtime_error when the byte counts do not match `grid`.
BlockDirectionImage unpack_field(std::string_view indices, std::string_view mask, const BlockGrid& grid);

} // namespace ridge
