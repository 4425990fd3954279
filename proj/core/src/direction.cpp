#include "ridge/direction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ridge {
namespace {

// Half-away-from-zero rounding. Values within 1e-9 of a half integer are
// snapped onto it first so that sin/cos noise cannot flip a tie.
int roundHalfAway(double v)
{
    const double half = std::round(v * 2.0) / 2.0;
    if (std::abs(v - half) < 1e-9) {
        v = half;
    }
    return static_cast<int>(std::round(v));
}

struct Point {
    int row;
    int col;
    friend bool operator==(const Point&, const Point&) = default;
};

// Rounded (-k sin t, k cos t). Angles are folded into [0, 45] with the
// mirror (col -> -col) and transpose symmetries so that related
// directions get exactly related offsets.
Point roundedPoint(double degrees, int k)
{
    if (degrees > 90.0) {
        Point p = roundedPoint(180.0 - degrees, k);
        return {p.row, -p.col};
    }
    if (degrees > 45.0) {
        Point p = roundedPoint(90.0 - degrees, k);
        return {-p.col, -p.row};
    }
    const double rad = degrees * std::numbers::pi / 180.0;
    return {roundHalfAway(-k * std::sin(rad)), roundHalfAway(k * std::cos(rad))};
}

// n/2 distinct points walking outward along one side of the line.
std::vector<Point> sidePoints(double degrees, int sign, std::size_t count)
{
    std::vector<Point> pts;
    for (int k = 1; pts.size() < count; ++k) {
        Point p = roundedPoint(degrees, sign * k);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
            pts.push_back(p);
        }
    }
    return pts;
}

} // namespace

DirectionSet build_direction_set(std::size_t N)
{
    if (N < 2 || N % 2 != 0) {
        throw std::invalid_argument("N must be even and at least 2 (got " + std::to_string(N) + ")");
    }
    if (N > 0xFFFF) {
        throw std::invalid_argument("N too large");
    }
    DirectionSet set;
    set.angles_.reserve(N);
    for (std::size_t d = 0; d < N; ++d) {
        set.angles_.push_back(static_cast<double>(d) * 180.0 / static_cast<double>(N));
    }
    return set;
}

OffsetRom generate_offset_rom(const DirectionSet& dirs, std::size_t n)
{
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("n must be even and at least 2 (got " + std::to_string(n) + ")");
    }
    if (n > 254) {
        throw std::out_of_range("n = " + std::to_string(n) + " cannot fit 8-bit signed offsets");
    }
    OffsetRom rom;
    rom.directions_ = dirs.count();
    rom.perDirection_ = n;
    rom.entries_.reserve(dirs.count() * n);

    auto push = [&](Point p) {
        if (std::abs(p.row) > 127 || std::abs(p.col) > 127) {
            throw std::out_of_range("offset exceeds 8-bit signed range");
        }
        rom.entries_.push_back(Offset{static_cast<std::int8_t>(p.row), static_cast<std::int8_t>(p.col)});
    };

    for (std::size_t d = 0; d < dirs.count(); ++d) {
        const double deg = dirs.angle(d);
        auto negative = sidePoints(deg, -1, n / 2);
        auto positive = sidePoints(deg, +1, n / 2);
        std::for_each(negative.rbegin(), negative.rend(), push);
        std::for_each(positive.begin(), positive.end(), push);
    }
    return rom;
}

NeighborAddress neighbor_address(std::size_t i, std::size_t j, Offset entry, const Image& img) noexcept
{
    NeighborAddress a;
    a.row = static_cast<std::ptrdiff_t>(i) + entry.di;
    a.col = static_cast<std::ptrdiff_t>(j) + entry.dj;
    a.valid = img.contains(a.row, a.col);
    return a;
}

std::string format_offset_rom(const OffsetRom& rom)
{
    std::ostringstream out;
    for (std::size_t d = 0; d < rom.directions(); ++d) {
        auto row = rom.direction(d);
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << d << ' ' << k << ' ' << static_cast<int>(row[k].di) << ' '
                << static_cast<int>(row[k].dj) << '\n';
        }
    }
    return out.str();
}

} // namespace ridge
