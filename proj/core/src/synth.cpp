#include "ridge/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace ridge {
namespace {

template <typename Fn>
Image generate(std::size_t height, std::size_t width, Fn&& fn)
{
    std::vector<Gray> px;
    px.reserve(height * width);
    for (std::size_t i = 0; i < height; ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            px.push_back(fn(i, j));
        }
    }
    return Image(height, width, std::move(px));
}

double normal_coordinate(std::size_t i, std::size_t j, double angleDegrees)
{
    const double t = angleDegrees * std::numbers::pi / 180.0;
    return static_cast<double>(i) * std::cos(t) + static_cast<double>(j) * std::sin(t);
}

} // namespace

Image make_sinusoid(std::size_t height, std::size_t width, const SinusoidSpec& spec)
{
    if (!(spec.period > 0.0)) {
        throw std::invalid_argument("sinusoid period must be positive");
    }
    return generate(height, width, [&](std::size_t i, std::size_t j) {
        const double u = normal_coordinate(i, j, spec.angleDegrees);
        const double v = spec.mean + spec.amplitude * std::cos(2.0 * std::numbers::pi * u / spec.period + spec.phase);
        return static_cast<Gray>(std::clamp(std::lround(v), 0L, 255L));
    });
}

Image make_stripes(std::size_t height, std::size_t width, double angleDegrees, double period)
{
    if (!(period > 0.0)) {
        throw std::invalid_argument("stripe period must be positive");
    }
    return generate(height, width, [&](std::size_t i, std::size_t j) {
        // Small bias keeps exact integer positions from landing on either side by noise.
        const double u = 2.0 * normal_coordinate(i, j, angleDegrees) / period + 1e-9;
        const auto band = static_cast<long long>(std::floor(u));
        return static_cast<Gray>(band % 2 == 0 ? 255 : 0);
    });
}

Image make_uniform(std::size_t height, std::size_t width, Gray value)
{
    return Image(height, width, value);
}

Image make_noise(std::size_t height, std::size_t width, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    return generate(height, width, [&](std::size_t, std::size_t) { return static_cast<Gray>(dist(rng)); });
}

Image brightness_shifted(const Image& img, int delta)
{
    std::vector<Gray> px;
    px.reserve(img.size());
    for (Gray g : img.pixels()) {
        const int v = g + delta;
        if (v < 0 || v > 255) {
            throw std::out_of_range("brightness shift leaves the 8-bit range");
        }
        px.push_back(static_cast<Gray>(v));
    }
    return Image(img.height(), img.width(), std::move(px));
}

Image inverted(const Image& img)
{
    std::vector<Gray> px;
    px.reserve(img.size());
    for (Gray g : img.pixels()) {
        px.push_back(static_cast<Gray>(255 - g));
    }
    return Image(img.height(), img.width(), std::move(px));
}

} // namespace ridge
