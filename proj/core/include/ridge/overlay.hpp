#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ridge/direction.hpp"
#include "ridge/image.hpp"
#include "ridge/orientation.hpp"

namespace ridge {

/// Endpoints in continuous (row, col) image coordinates.
struct Segment {
    double row0 = 0, col0 = 0;
    double row1 = 0, col1 = 0;
};

/// One segment per valid block, centered on the block, `lengthFactor *
/// blockSize` long, at angle[d]. Invalid blocks map to nullopt.
std::vector<std::optional<Segment>> overlay_segments(const BlockDirectionImage& field,
                                                     const DirectionSet& dirs,
                                                     double lengthFactor = 0.75);

/// SVG with one <line> per valid block. When backgroundHref is non-empty the
/// image is referenced underneath.
std::string render_svg(const BlockDirectionImage& field, const DirectionSet& dirs, std::size_t height,
                       std::size_t width, const std::string& backgroundHref = {});

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

class RgbImage {
public:
    RgbImage(std::size_t height, std::size_t width) : height_(height), width_(width), px_(height * width) {}
    explicit RgbImage(const Image& gray);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    const Rgb& at(std::size_t i, std::size_t j) const { return px_.at(i * width_ + j); }
    /// Ignores points outside the raster.
    void plot(long i, long j, Rgb c) noexcept;

private:
    std::size_t height_, width_;
    std::vector<Rgb> px_;
};

/// Integer Bresenham line between two pixel positions, clipped to the raster.
void draw_line(RgbImage& img, long r0, long c0, long r1, long c1, Rgb color);

/// Gray image with the segments drawn in `color`.
RgbImage render_raster(const Image& background, const BlockDirectionImage& field, const DirectionSet& dirs,
                       Rgb color = {255, 0, 0});

std::string to_ppm_binary(const RgbImage& img);

} // namespace ridge
