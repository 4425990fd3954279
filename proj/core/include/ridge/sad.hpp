#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ridge/direction.hpp"
#include "ridge/image.hpp"

namespace ridge {

/// One S_d sum. With n = 8 samples it never exceeds 8 * 255 = 2040 and so
/// fits the 11-bit SdCU output.
using SdValue = std::uint16_t;

inline constexpr unsigned kGrayBits = 8;

/// Largest direction length the 8-bit Offset-ROM can describe (n <= 254).
inline constexpr std::size_t kMaxAdderTerms = 256;

/// Output width of an adder tree reducing `terms` 8-bit inputs: one carry
/// bit per layer.
constexpr unsigned adder_tree_width(std::size_t terms) noexcept
{
    unsigned width = kGrayBits;
    for (std::size_t live = terms; live > 1; live = (live + 1) / 2) {
        ++width;
    }
    return width;
}

/// Absolute value of difference as the AVD block computes it: a + ~b + 1 in
/// 9 bits, then a two's-complement negate of the low byte when no carry
/// comes out (a < b).
std::uint8_t avd(Gray a, Gray b) noexcept;

/// Sums up to kMaxAdderTerms 8-bit terms through a balanced binary adder tree. Each layer's
/// results are truncated to that layer's width (9, 10, 11, ... bits), so
/// the result matches what the fixed-width hardware would produce.
SdValue adder_tree(std::span<const std::uint8_t> terms);

/// S_d calculation unit: AVD(center, neighbor) for each neighbor, then the
/// adder tree. Throws std::invalid_argument if neighbors.size() != n.
SdValue sdcu(Gray center, std::span<const Gray> neighbors, std::size_t n = 8);

struct SdVector {
    std::vector<SdValue> sums;          // indexed by direction
    std::vector<std::uint16_t> validCount; // in-bounds neighbors summed per direction

    /// True when every direction saw all `n` of its neighbors.
    bool complete(std::size_t n) const noexcept;
};

/// S_d for every direction at pixel (i, j). Neighbors outside the image are
/// skipped (their AVD input is gated to zero) and not counted in validCount.
SdVector compute_sd_vector(const Image& img, std::size_t i, std::size_t j, const OffsetRom& rom);

} // namespace ridge
