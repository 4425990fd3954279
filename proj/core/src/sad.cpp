#include "ridge/sad.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace ridge {

std::uint8_t avd(Gray a, Gray b) noexcept
{
    const unsigned sum = (a + (~static_cast<unsigned>(b) & 0xFFu) + 1u) & 0x1FFu;
    const bool carry = (sum & 0x100u) != 0;
    const unsigned low = sum & 0xFFu;
    return static_cast<std::uint8_t>(carry ? low : ((~low + 1u) & 0xFFu));
}

SdValue adder_tree(std::span<const std::uint8_t> terms)
{
    if (terms.empty()) {
        return 0;
    }
    if (terms.size() > kMaxAdderTerms) {
        throw std::invalid_argument("adder_tree: too many terms");
    }
    std::array<unsigned, kMaxAdderTerms> layer;
    std::copy(terms.begin(), terms.end(), layer.begin());
    std::size_t live = terms.size();
    unsigned width = kGrayBits;
    while (live > 1) {
        ++width;
        const unsigned mask = (1u << width) - 1u;
        std::size_t out = 0;
        for (std::size_t k = 0; k + 1 < live; k += 2) {
            layer[out++] = (layer[k] + layer[k + 1]) & mask;
        }
        if (live % 2 != 0) {
            layer[out++] = layer[live - 1];
        }
        live = out;
    }
    return static_cast<SdValue>(layer[0]);
}

SdValue sdcu(Gray center, std::span<const Gray> neighbors, std::size_t n)
{
    if (neighbors.size() != n) {
        throw std::invalid_argument("sdcu: expected " + std::to_string(n) + " neighbors, got " +
                                    std::to_string(neighbors.size()));
    }
    std::array<std::uint8_t, kMaxAdderTerms> diffs;
    std::transform(neighbors.begin(), neighbors.end(), diffs.begin(),
                   [center](Gray g) { return avd(center, g); });
    return adder_tree(std::span<const std::uint8_t>(diffs.data(), n));
}

bool SdVector::complete(std::size_t n) const noexcept
{
    return std::all_of(validCount.begin(), validCount.end(), [n](auto c) { return c == n; });
}

SdVector compute_sd_vector(const Image& img, std::size_t i, std::size_t j, const OffsetRom& rom)
{
    const std::size_t N = rom.directions();
    const std::size_t n = rom.perDirection();
    const Gray center = img(i, j);

    SdVector v;
    v.sums.resize(N);
    v.validCount.resize(N);
    std::array<std::uint8_t, kMaxAdderTerms> diffs;
    for (std::size_t d = 0; d < N; ++d) {
        auto row = rom.direction(d);
        std::uint16_t valid = 0;
        for (std::size_t k = 0; k < n; ++k) {
            auto a = neighbor_address(i, j, row[k], img);
            if (a.valid) {
                diffs[k] = avd(center, img(static_cast<std::size_t>(a.row), static_cast<std::size_t>(a.col)));
                ++valid;
            } else {
                diffs[k] = 0;
            }
        }
        v.sums[d] = adder_tree(std::span<const std::uint8_t>(diffs.data(), n));
        v.validCount[d] = valid;
    }
    return v;
}

} // namespace ridge
