#include "ridge/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ridge {

double normalize_angle(double degrees) noexcept
{
    double a = std::fmod(degrees, 180.0);
    if (a < 0.0) {
        a += 180.0;
    }
    if (a >= 180.0) {
        a -= 180.0;
    }
    return a == 0.0 ? 0.0 : a; // no -0
}

double angular_difference(double a, double b) noexcept
{
    const double d = std::abs(normalize_angle(a) - normalize_angle(b));
    return std::min(d, 180.0 - d);
}

AngleField gradient_orientation(const Image& img, std::size_t blockSize)
{
    const BlockGrid grid = partition_blocks(img, blockSize);
    if (grid.count() == 0) {
        throw std::invalid_argument("gradient_orientation: image is smaller than one block");
    }
    AngleField field(grid);
    const std::size_t H = img.height();
    const std::size_t W = img.width();
    auto f = [&](std::size_t i, std::size_t j) { return static_cast<std::int64_t>(img(i, j)); };

    for (std::size_t br = 0; br < grid.rows; ++br) {
        for (std::size_t bc = 0; bc < grid.cols; ++bc) {
            std::int64_t sxy = 0;
            std::int64_t sxx_yy = 0;
            std::int64_t energy = 0;
            for (std::size_t i = br * blockSize; i < (br + 1) * blockSize; ++i) {
                if (i == 0 || i + 1 >= H) {
                    continue;
                }
                for (std::size_t j = bc * blockSize; j < (bc + 1) * blockSize; ++j) {
                    if (j == 0 || j + 1 >= W) {
                        continue;
                    }
                    const std::int64_t gx = (f(i - 1, j + 1) + 2 * f(i, j + 1) + f(i + 1, j + 1)) -
                                            (f(i - 1, j - 1) + 2 * f(i, j - 1) + f(i + 1, j - 1));
                    const std::int64_t gy = (f(i - 1, j - 1) + 2 * f(i - 1, j) + f(i - 1, j + 1)) -
                                            (f(i + 1, j - 1) + 2 * f(i + 1, j) + f(i + 1, j + 1));
                    sxy += 2 * gx * gy;
                    sxx_yy += gx * gx - gy * gy;
                    energy += gx * gx + gy * gy;
                }
            }
            AngleCell& cell = field.at(br, bc);
            cell.valid = energy > 0;
            if (cell.valid) {
                const double half = 0.5 * std::atan2(static_cast<double>(sxy), static_cast<double>(sxx_yy));
                cell.degrees = normalize_angle(90.0 + half * 180.0 / std::numbers::pi);
            }
        }
    }
    return field;
}

BlockDirectionImage quantize_field(const AngleField& field, const DirectionSet& dirs)
{
    BlockDirectionImage out(field.grid());
    for (std::size_t r = 0; r < field.rows(); ++r) {
        for (std::size_t c = 0; c < field.cols(); ++c) {
            const AngleCell& cell = field.at(r, c);
            if (!cell.valid) {
                continue;
            }
            std::size_t best = 0;
            double bestDist = angular_difference(cell.degrees, dirs.angle(0));
            for (std::size_t d = 1; d < dirs.count(); ++d) {
                const double dist = angular_difference(cell.degrees, dirs.angle(d));
                if (dist < bestDist) {
                    best = d;
                    bestDist = dist;
                }
            }
            out.at(r, c) = BlockResult{DirectionIndex(best), true};
        }
    }
    return out;
}

AngleField to_angle_field(const BlockDirectionImage& field, const DirectionSet& dirs)
{
    AngleField out(field.grid());
    for (std::size_t r = 0; r < field.rows(); ++r) {
        for (std::size_t c = 0; c < field.cols(); ++c) {
            const BlockResult& b = field.at(r, c);
            out.at(r, c) = AngleCell{b.valid ? dirs.angle(b.direction) : 0.0, b.valid};
        }
    }
    return out;
}

ErrorReport error_metric(const AngleField& reference, const AngleField& estimate)
{
    if (reference.rows() != estimate.rows() || reference.cols() != estimate.cols()) {
        throw std::invalid_argument("error_metric: fields differ in size (" +
                                    std::to_string(reference.rows()) + "x" + std::to_string(reference.cols()) +
                                    " vs " + std::to_string(estimate.rows()) + "x" +
                                    std::to_string(estimate.cols()) + ")");
    }
    ErrorReport rep;
    rep.rows = reference.rows();
    rep.cols = reference.cols();
    double sumSq = 0.0;
    double sumAbs = 0.0;
    for (std::size_t k = 0; k < reference.cells().size(); ++k) {
        const AngleCell& g = reference.cells()[k];
        const AngleCell& p = estimate.cells()[k];
        if (!g.valid || !p.valid) {
            continue;
        }
        const double diff = angular_difference(g.degrees, p.degrees);
        sumSq += diff * diff;
        sumAbs += diff;
        rep.maxAbsError = std::max(rep.maxAbsError, diff);
        ++rep.validBlocks;
    }
    if (rep.validBlocks > 0) {
        const auto count = static_cast<double>(rep.validBlocks);
        rep.meanSquaredError = sumSq / count;
        rep.rmsError = std::sqrt(rep.meanSquaredError);
        rep.meanAbsError = sumAbs / count;
    }
    return rep;
}

} // namespace ridge
