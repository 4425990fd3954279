#pragma once

#include <cstddef>
#include <cstdint>

#include "ridge/image.hpp"

namespace ridge {

// Test patterns with a known ridge direction. Angles follow the
// DirectionSet convention: counter-clockwise from the +column axis, rows
// growing downward. Gray levels are constant along the ridge direction
// (-sin t, cos t) and vary along the normal (cos t, sin t).

struct SinusoidSpec {
    double angleDegrees = 0.0;
    double period = 8.0; // pixels, measured along the normal
    double mean = 128.0;
    double amplitude = 127.0;
    double phase = 0.0; // radians
};

/// f(i, j) = mean + amplitude * cos(2 pi (i cos t + j sin t) / period + phase),
/// rounded and clamped to [0, 255].
Image make_sinusoid(std::size_t height, std::size_t width, const SinusoidSpec& spec);

/// Binary 255/0 stripes: 255 where floor(2 (i cos t + j sin t) / period) is
/// even. period = 2 at 0 degrees gives 255 on even rows.
Image make_stripes(std::size_t height, std::size_t width, double angleDegrees, double period);

Image make_uniform(std::size_t height, std::size_t width, Gray value);

/// Uniform white noise from a seeded std::mt19937.
Image make_noise(std::size_t height, std::size_t width, std::uint32_t seed);

/// Adds `delta` to every pixel. Throws std::out_of_range if any result
/// leaves [0, 255].
Image brightness_shifted(const Image& img, int delta);

/// 255 - f.
Image inverted(const Image& img);

} // namespace ridge
