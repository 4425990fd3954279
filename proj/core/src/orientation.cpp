#include "ridge/orientation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ridge {
namespace {

struct CountPayload {
    std::uint8_t count = 0;
    DirectionIndex index;
};

// Maximum switch: same element as min_switch with the mux inputs swapped.
constexpr CountPayload max_switch(CountPayload first, CountPayload second) noexcept
{
    return second.count > first.count ? second : first;
}

void check_arity(const char* what, std::size_t got, std::size_t expected)
{
    if (got != expected) {
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                    " inputs, got " + std::to_string(got));
    }
}

} // namespace

std::vector<SwitchPayload> min_switch_layer(std::span<const SwitchPayload> inputs)
{
    std::vector<SwitchPayload> out;
    out.reserve((inputs.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < inputs.size(); k += 2) {
        out.push_back(min_switch(inputs[k], inputs[k + 1]));
    }
    if (inputs.size() % 2 != 0) {
        out.push_back(inputs.back());
    }
    return out;
}

SwitchPayload minimum_tree(std::span<const SwitchPayload> payloads, std::size_t N)
{
    check_arity("minimum_tree", payloads.size(), N);
    if (N == 0) {
        throw std::invalid_argument("minimum_tree: no inputs");
    }
    for (std::size_t k = 0; k < N; ++k) {
        if (payloads[k].index.value != k) {
            throw std::invalid_argument("minimum_tree: payload " + std::to_string(k) +
                                        " carries index " + std::to_string(payloads[k].index.value));
        }
    }
    std::vector<SwitchPayload> layer(payloads.begin(), payloads.end());
    while (layer.size() > 1) {
        layer = min_switch_layer(layer);
    }
    return layer.front();
}

DirectionIndex maximum_tree(std::span<const std::uint8_t> counts, std::size_t N)
{
    check_arity("maximum_tree", counts.size(), N);
    if (N == 0) {
        throw std::invalid_argument("maximum_tree: no inputs");
    }
    std::vector<CountPayload> layer;
    layer.reserve(N);
    for (std::size_t k = 0; k < N; ++k) {
        layer.push_back({counts[k], DirectionIndex(k)});
    }
    while (layer.size() > 1) {
        std::vector<CountPayload> next;
        next.reserve((layer.size() + 1) / 2);
        for (std::size_t k = 0; k + 1 < layer.size(); k += 2) {
            next.push_back(max_switch(layer[k], layer[k + 1]));
        }
        if (layer.size() % 2 != 0) {
            next.push_back(layer.back());
        }
        layer = std::move(next);
    }
    return layer.front().index;
}

std::vector<SwitchPayload> to_payloads(const SdVector& v)
{
    std::vector<SwitchPayload> p;
    p.reserve(v.sums.size());
    for (std::size_t k = 0; k < v.sums.size(); ++k) {
        p.push_back({v.sums[k], DirectionIndex(k)});
    }
    return p;
}

std::optional<DirectionIndex> pixel_direction(const Image& img, std::size_t i, std::size_t j,
                                              const OffsetRom& rom)
{
    const SdVector v = compute_sd_vector(img, i, j, rom);
    if (!v.complete(rom.perDirection())) {
        return std::nullopt;
    }
    // Same switch tree as minimum_tree, reduced in place.
    std::vector<SwitchPayload> layer = to_payloads(v);
    std::size_t live = layer.size();
    while (live > 1) {
        std::size_t out = 0;
        for (std::size_t k = 0; k + 1 < live; k += 2) {
            layer[out++] = min_switch(layer[k], layer[k + 1]);
        }
        if (live % 2 != 0) {
            layer[out++] = layer[live - 1];
        }
        live = out;
    }
    return layer[0].index;
}

std::size_t BlockDirectionImage::validCount() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [](const BlockResult& b) { return b.valid; }));
}

BlockResult block_direction(const Image& img, BlockCoord block, const BlockGrid& grid,
                            const OffsetRom& rom)
{
    if (!grid.contains(block)) {
        throw std::out_of_range("block_direction: block outside grid");
    }
    DirectionHistogram hist(rom.directions());
    const std::size_t i0 = block.row * grid.blockSize;
    const std::size_t j0 = block.col * grid.blockSize;
    for (std::size_t i = i0; i < i0 + grid.blockSize; ++i) {
        for (std::size_t j = j0; j < j0 + grid.blockSize; ++j) {
            if (auto d = pixel_direction(img, i, j, rom)) {
                hist.vote(*d);
            }
        }
    }
    return BlockResult{hist.winner(), hist.votes() > 0};
}

BlockDirectionImage estimate_orientation_field(const Image& img, const OffsetRom& rom,
                                               std::size_t blockSize)
{
    BlockGrid grid = partition_blocks(img, blockSize);
    if (grid.count() == 0) {
        throw std::invalid_argument("image " + std::to_string(img.height()) + "x" +
                                    std::to_string(img.width()) + " is smaller than one " +
                                    std::to_string(blockSize) + "x" + std::to_string(blockSize) +
                                    " block");
    }
    BlockDirectionImage field(grid);
    for (std::size_t r = 0; r < grid.rows; ++r) {
        for (std::size_t c = 0; c < grid.cols; ++c) {
            field.at(r, c) = block_direction(img, {r, c}, grid, rom);
        }
    }
    return field;
}

BlockDirectionImage estimate_orientation_field(const Image& img, const OrientationParams& params)
{
    const OffsetRom rom = generate_offset_rom(build_direction_set(params.directions), params.samples);
    return estimate_orientation_field(img, rom, params.blockSize);
}

} // namespace ridge
