#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ridge/direction.hpp"
#include "ridge/image.hpp"
#include "ridge/sad.hpp"

namespace ridge {

/// What travels through a Minimum switch: the sum and the direction it
/// belongs to (11 + 4 = 15 bits for N = 16).
struct SwitchPayload {
    SdValue sd = 0;
    DirectionIndex index;
    friend bool operator==(const SwitchPayload&, const SwitchPayload&) = default;
};

/// Comparator + multiplexer. Routes the smaller sum; on equality the first
/// (lower-index) input passes.
constexpr SwitchPayload min_switch(SwitchPayload first, SwitchPayload second) noexcept
{
    return second.sd < first.sd ? second : first;
}

/// One layer of switches, pairing adjacent inputs. An odd trailing input
/// passes through unchanged.
std::vector<SwitchPayload> min_switch_layer(std::span<const SwitchPayload> inputs);

/// Minimum block: a binary tree of N - 1 switches. Throws
/// std::invalid_argument if payloads.size() != N or payload[k].index != k.
SwitchPayload minimum_tree(std::span<const SwitchPayload> payloads, std::size_t N);

/// Maximum block over the direction counters, lower index on ties.
/// Throws std::invalid_argument if counts.size() != N.
DirectionIndex maximum_tree(std::span<const std::uint8_t> counts, std::size_t N);

/// The per-block direction counters. 8 bits each; they saturate at 255
/// instead of wrapping so a unanimous 256-pixel block keeps its winner.
class DirectionHistogram {
public:
    static constexpr std::uint8_t kCounterMax = 255;

    explicit DirectionHistogram(std::size_t directions) : counters_(directions, 0) {}

    void vote(DirectionIndex d) noexcept
    {
        auto& c = counters_[d.value];
        if (c < kCounterMax) {
            ++c;
        }
        ++votes_;
    }
    void clear() noexcept
    {
        std::fill(counters_.begin(), counters_.end(), 0);
        votes_ = 0;
    }

    std::span<const std::uint8_t> counters() const noexcept { return counters_; }
    std::size_t votes() const noexcept { return votes_; }
    DirectionIndex winner() const { return maximum_tree(counters_, counters_.size()); }

private:
    std::vector<std::uint8_t> counters_;
    std::size_t votes_ = 0;
};

/// Minimum-tree payloads for an SdVector, index k at position k.
std::vector<SwitchPayload> to_payloads(const SdVector& v);

/// Direction of least gray-level variation at (i, j), or nullopt when any
/// direction is missing neighbors (border pixels do not vote).
std::optional<DirectionIndex> pixel_direction(const Image& img, std::size_t i, std::size_t j,
                                              const OffsetRom& rom);

struct BlockResult {
    DirectionIndex direction;
    bool valid = false;
    friend bool operator==(const BlockResult&, const BlockResult&) = default;
};

/// Per-block winning direction plus validity (at least one pixel voted).
class BlockDirectionImage {
public:
    BlockDirectionImage() = default;
    explicit BlockDirectionImage(BlockGrid grid)
        : grid_(grid), cells_(grid.count())
    {
    }

    const BlockGrid& grid() const noexcept { return grid_; }
    std::size_t rows() const noexcept { return grid_.rows; }
    std::size_t cols() const noexcept { return grid_.cols; }

    const BlockResult& at(std::size_t r, std::size_t c) const { return cells_.at(r * grid_.cols + c); }
    BlockResult& at(std::size_t r, std::size_t c) { return cells_.at(r * grid_.cols + c); }
    std::span<const BlockResult> cells() const noexcept { return cells_; }

    std::size_t validCount() const noexcept;

    friend bool operator==(const BlockDirectionImage&, const BlockDirectionImage&) = default;

private:
    BlockGrid grid_;
    std::vector<BlockResult> cells_;
};

BlockResult block_direction(const Image& img, BlockCoord block, const BlockGrid& grid,
                            const OffsetRom& rom);

struct OrientationParams {
    std::size_t directions = 16;    // N
    std::size_t samples = 8;        // n, pixels per direction
    std::size_t blockSize = 16;
};

/// Block direction image over every full block. Throws std::invalid_argument
/// when the image is smaller than one block.
BlockDirectionImage estimate_orientation_field(const Image& img, const OffsetRom& rom,
                                               std::size_t blockSize);
BlockDirectionImage estimate_orientation_field(const Image& img, const OrientationParams& params);

} // namespace ridge
