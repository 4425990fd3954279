#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ridge/direction.hpp"
#include "ridge/image.hpp"
#include "ridge/orientation.hpp"

namespace ridge {

struct AngleCell {
    double degrees = 0.0; // [0, 180)
    bool valid = false;
    friend bool operator==(const AngleCell&, const AngleCell&) = default;
};

/// Per-block angles in degrees.
class AngleField {
public:
    AngleField() = default;
    explicit AngleField(BlockGrid grid) : grid_(grid), cells_(grid.count()) {}

    const BlockGrid& grid() const noexcept { return grid_; }
    std::size_t rows() const noexcept { return grid_.rows; }
    std::size_t cols() const noexcept { return grid_.cols; }
    const AngleCell& at(std::size_t r, std::size_t c) const { return cells_.at(r * grid_.cols + c); }
    AngleCell& at(std::size_t r, std::size_t c) { return cells_.at(r * grid_.cols + c); }
    std::span<const AngleCell> cells() const noexcept { return cells_; }

private:
    BlockGrid grid_;
    std::vector<AngleCell> cells_;
};

/// Maps any angle onto [0, 180).
double normalize_angle(double degrees) noexcept;

/// Distance on the 180-degree circle, in [0, 90].
double angular_difference(double a, double b) noexcept;

/// Averaged squared-gradient estimate. Per pixel, 3x3 Sobel gradients
/// (Gx rightward, Gy upward); per block,
///   angle = 90 + 0.5 * atan2(sum 2 Gx Gy, sum (Gx^2 - Gy^2))
/// in the same row-down / counter-clockwise convention as DirectionSet.
/// Only pixels with a full 3x3 neighborhood contribute. Blocks with zero
/// gradient energy are invalid. Throws std::invalid_argument when the image
/// is smaller than one block.
AngleField gradient_orientation(const Image& img, std::size_t blockSize);

/// Nearest direction on the circle, lower index on ties. Invalid cells stay
/// invalid.
BlockDirectionImage quantize_field(const AngleField& field, const DirectionSet& dirs);

/// angle[d] for every block of a direction image.
AngleField to_angle_field(const BlockDirectionImage& field, const DirectionSet& dirs);

struct ErrorReport {
    double meanSquaredError = 0.0; // degrees^2
    double rmsError = 0.0;         // degrees
    double meanAbsError = 0.0;     // degrees
    double maxAbsError = 0.0;      // degrees
    std::size_t validBlocks = 0;   // blocks valid in both fields; replaces M^2
    std::size_t rows = 0;
    std::size_t cols = 0;
};

/// Compares two fields over blocks valid in both. Throws
/// std::invalid_argument when the dimensions differ.
ErrorReport error_metric(const AngleField& reference, const AngleField& estimate);

} // namespace ridge
