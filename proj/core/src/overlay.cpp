#include "ridge/overlay.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace ridge {

std::vector<std::optional<Segment>> overlay_segments(const BlockDirectionImage& field,
                                                     const DirectionSet& dirs, double lengthFactor)
{
    const double bs = static_cast<double>(field.grid().blockSize);
    const double half = 0.5 * lengthFactor * bs;
    std::vector<std::optional<Segment>> out;
    out.reserve(field.cells().size());
    for (std::size_t r = 0; r < field.rows(); ++r) {
        for (std::size_t c = 0; c < field.cols(); ++c) {
            const BlockResult& b = field.at(r, c);
            if (!b.valid) {
                out.emplace_back();
                continue;
            }
            const double t = dirs.angle(b.direction) * std::numbers::pi / 180.0;
            const double cr = static_cast<double>(r) * bs + bs / 2.0;
            const double cc = static_cast<double>(c) * bs + bs / 2.0;
            const double dr = -half * std::sin(t);
            const double dc = half * std::cos(t);
            out.push_back(Segment{cr - dr, cc - dc, cr + dr, cc + dc});
        }
    }
    return out;
}

std::string render_svg(const BlockDirectionImage& field, const DirectionSet& dirs, std::size_t height,
                       std::size_t width, const std::string& backgroundHref)
{
    std::ostringstream out;
    out.precision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    if (backgroundHref.empty()) {
        out << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    } else {
        out << "  <image href=\"" << backgroundHref << "\" width=\"" << width << "\" height=\"" << height
            << "\"/>\n";
    }
    out << "  <g stroke=\"#d02020\" stroke-width=\"1.5\" stroke-linecap=\"round\">\n";
    for (const auto& seg : overlay_segments(field, dirs)) {
        if (!seg) {
            continue;
        }
        out << "    <line x1=\"" << seg->col0 << "\" y1=\"" << seg->row0 << "\" x2=\"" << seg->col1
            << "\" y2=\"" << seg->row1 << "\"/>\n";
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

RgbImage::RgbImage(const Image& gray) : RgbImage(gray.height(), gray.width())
{
    for (std::size_t k = 0; k < gray.size(); ++k) {
        const Gray g = gray.pixels()[k];
        px_[k] = Rgb{g, g, g};
    }
}

void RgbImage::plot(long i, long j, Rgb c) noexcept
{
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= height_ || static_cast<std::size_t>(j) >= width_) {
        return;
    }
    px_[static_cast<std::size_t>(i) * width_ + static_cast<std::size_t>(j)] = c;
}

void draw_line(RgbImage& img, long r0, long c0, long r1, long c1, Rgb color)
{
    const long dc = std::labs(c1 - c0);
    const long dr = -std::labs(r1 - r0);
    const long sc = c0 < c1 ? 1 : -1;
    const long sr = r0 < r1 ? 1 : -1;
    long err = dc + dr;
    for (;;) {
        img.plot(r0, c0, color);
        if (r0 == r1 && c0 == c1) {
            break;
        }
        const long e2 = 2 * err;
        if (e2 >= dr) {
            err += dr;
            c0 += sc;
        }
        if (e2 <= dc) {
            err += dc;
            r0 += sr;
        }
    }
}

RgbImage render_raster(const Image& background, const BlockDirectionImage& field, const DirectionSet& dirs,
                       Rgb color)
{
    RgbImage out(background);
    for (const auto& seg : overlay_segments(field, dirs)) {
        if (seg) {
            draw_line(out, std::lround(seg->row0), std::lround(seg->col0), std::lround(seg->row1),
                      std::lround(seg->col1), color);
        }
    }
    return out;
}

std::string to_ppm_binary(const RgbImage& img)
{
    std::string out = "P6\n" + std::to_string(img.width()) + ' ' + std::to_string(img.height()) + "\n255\n";
    out.reserve(out.size() + img.height() * img.width() * 3);
    for (std::size_t i = 0; i < img.height(); ++i) {
        for (std::size_t j = 0; j < img.width(); ++j) {
            const Rgb& p = img.at(i, j);
            out.push_back(static_cast<char>(p.r));
            out.push_back(static_cast<char>(p.g));
            out.push_back(static_cast<char>(p.b));
        }
    }
    return out;
}

} // namespace ridge
