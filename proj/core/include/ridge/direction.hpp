#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ridge/image.hpp"

namespace ridge {

/// Quantized orientation, an index into a DirectionSet.
struct DirectionIndex {
    std::uint16_t value = 0;

    constexpr DirectionIndex() = default;
    constexpr explicit DirectionIndex(std::size_t v) : value(static_cast<std::uint16_t>(v)) {}

    friend constexpr auto operator<=>(DirectionIndex, DirectionIndex) = default;
};

/// N directions evenly spaced over [0, 180) degrees; angle[d] = d * 180 / N.
///
/// Angles are measured counter-clockwise from the +column axis with rows
/// growing downward, so direction d steps through the image as
/// (row, col) = (-k sin(angle), k cos(angle)).
class DirectionSet {
public:
    std::size_t count() const noexcept { return angles_.size(); }
    double angle(std::size_t d) const { return angles_.at(d); }
    double angle(DirectionIndex d) const { return angle(d.value); }
    std::span<const double> angles() const noexcept { return angles_; }

    /// Index whose angle is the reflection 180 - angle[d].
    DirectionIndex mirrored(DirectionIndex d) const noexcept
    {
        return DirectionIndex((count() - d.value) % count());
    }

    /// Index whose angle is 90 - angle[d] (mod 180). This is where a pattern
    /// at direction d lands after the image is transposed. Requires N % 4 == 0.
    DirectionIndex transposed(DirectionIndex d) const noexcept
    {
        return DirectionIndex((count() + count() / 2 - d.value) % count());
    }

private:
    friend DirectionSet build_direction_set(std::size_t N);
    std::vector<double> angles_;
};

/// Throws std::invalid_argument unless N >= 2 and N is even.
DirectionSet build_direction_set(std::size_t N);

struct Offset {
    std::int8_t di = 0;
    std::int8_t dj = 0;
    friend constexpr bool operator==(Offset, Offset) = default;
    friend constexpr auto operator<=>(Offset, Offset) = default;
};

/// N x n table of signed pixel offsets, the sample pattern of each direction.
///
/// Each row holds n offsets on the rounded line through the center pixel,
/// n/2 on each side. Entries are stored negative side first (outermost to
/// innermost), then positive side (innermost to outermost).
class OffsetRom {
public:
    std::size_t directions() const noexcept { return directions_; }
    std::size_t perDirection() const noexcept { return perDirection_; }
    std::size_t size() const noexcept { return entries_.size(); }

    std::span<const Offset> direction(std::size_t d) const
    {
        return std::span<const Offset>(entries_).subspan(d * perDirection_, perDirection_);
    }
    /// Flat ROM order: entry index = d * n + k.
    std::span<const Offset> entries() const noexcept { return entries_; }
    Offset at(std::size_t d, std::size_t k) const { return entries_.at(d * perDirection_ + k); }

private:
    friend OffsetRom generate_offset_rom(const DirectionSet& dirs, std::size_t n);
    std::size_t directions_ = 0;
    std::size_t perDirection_ = 0;
    std::vector<Offset> entries_;
};

/// Builds the ROM for `dirs` with n samples per direction.
/// Throws std::invalid_argument unless n >= 2 and n is even, and
/// std::out_of_range if an offset would not fit in 8 signed bits.
OffsetRom generate_offset_rom(const DirectionSet& dirs, std::size_t n);

struct NeighborAddress {
    std::ptrdiff_t row = 0;
    std::ptrdiff_t col = 0;
    bool valid = false;
};

/// (i + di, j + dj), flagged invalid when it falls outside the image.
NeighborAddress neighbor_address(std::size_t i, std::size_t j, Offset entry, const Image& img) noexcept;

/// One line per entry: `d k di dj`.
std::string format_offset_rom(const OffsetRom& rom);

} // namespace ridge
