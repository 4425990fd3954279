#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ridge {

using Gray = std::uint8_t;

/// 8-bit grayscale raster, row-major, `height` rows by `width` columns.
class Image {
public:
    Image() = default;
    Image(std::size_t height, std::size_t width, Gray fill = 0);
    /// Throws std::invalid_argument when pixels.size() != height * width.
    Image(std::size_t height, std::size_t width, std::vector<Gray> pixels);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return pixels_.size(); }
    bool empty() const noexcept { return pixels_.empty(); }

    std::span<const Gray> pixels() const noexcept { return pixels_; }

    // Unchecked access; callers clip first.
    Gray operator()(std::size_t i, std::size_t j) const noexcept { return pixels_[i * width_ + j]; }

    bool contains(std::ptrdiff_t i, std::ptrdiff_t j) const noexcept
    {
        return i >= 0 && j >= 0 && static_cast<std::size_t>(i) < height_ &&
               static_cast<std::size_t>(j) < width_;
    }

    friend bool operator==(const Image&, const Image&) = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<Gray> pixels_;
};

/// Bounds-checked pixel read. Throws std::out_of_range outside the raster.
Gray pixel_at(const Image& img, std::size_t i, std::size_t j);

Image transposed(const Image& img);

struct BlockCoord {
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const BlockCoord&, const BlockCoord&) = default;
};

/// Grid of full, non-overlapping square blocks anchored at the origin.
/// Trailing rows/columns that do not fill a block are not covered.
struct BlockGrid {
    std::size_t blockSize = 16;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t count() const noexcept { return rows * cols; }
    std::size_t pixelsPerBlock() const noexcept { return blockSize * blockSize; }
    bool contains(BlockCoord b) const noexcept { return b.row < rows && b.col < cols; }

    friend bool operator==(const BlockGrid&, const BlockGrid&) = default;
};

/// Throws std::invalid_argument for blockSize == 0.
BlockGrid partition_blocks(const Image& img, std::size_t blockSize);

} // namespace ridge
