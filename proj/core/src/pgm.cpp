#include "ridge/pgm.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

namespace ridge {
namespace {

class Scanner {
public:
    explicit Scanner(std::string_view data) : data_(data) {}

    // Skips whitespace and '#' comments that run to end of line.
    void skipSeparators()
    {
        while (pos_ < data_.size()) {
            char c = data_[pos_];
            if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') {
                    ++pos_;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::optional<unsigned long> number()
    {
        skipSeparators();
        unsigned long value = 0;
        auto first = data_.data() + pos_;
        auto last = data_.data() + data_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) {
            return std::nullopt;
        }
        // A number must end at a separator or end of input.
        if (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr)) && *ptr != '#') {
            return std::nullopt;
        }
        pos_ = static_cast<std::size_t>(ptr - data_.data());
        return value;
    }

    bool atEnd()
    {
        skipSeparators();
        return pos_ >= data_.size();
    }

    std::size_t pos() const noexcept { return pos_; }
    void advance(std::size_t n) noexcept { pos_ += n; }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

[[noreturn]] void fail(PgmErrorKind kind, const std::string& msg)
{
    throw PgmError(kind, "pgm: " + msg);
}

} // namespace

Image load_pgm(std::string_view bytes)
{
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        fail(PgmErrorKind::MalformedHeader, "malformed header: expected magic P2 or P5");
    }
    const bool binary = bytes[1] == '5';
    Scanner in(bytes.substr(2));
    if (!bytes.substr(2).empty() && !std::isspace(static_cast<unsigned char>(bytes[2])) &&
        bytes[2] != '#') {
        fail(PgmErrorKind::MalformedHeader, "malformed header: bad magic");
    }

    auto width = in.number();
    auto height = in.number();
    auto maxval = in.number();
    if (!width || !height || !maxval) {
        fail(PgmErrorKind::MalformedHeader, "malformed header");
    }
    if (*width == 0 || *height == 0 || *maxval == 0 || *maxval > 65535) {
        fail(PgmErrorKind::MalformedHeader, "malformed header: bad dimensions or maxval");
    }
    if (*maxval > 255) {
        fail(PgmErrorKind::UnsupportedMaxval, "unsupported maxval " + std::to_string(*maxval));
    }

    const std::size_t count = *width * *height;
    std::vector<Gray> pixels;
    pixels.reserve(count);

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        std::string_view rest = bytes.substr(2 + in.pos());
        if (rest.empty() || !std::isspace(static_cast<unsigned char>(rest[0]))) {
            if (rest.empty()) {
                fail(PgmErrorKind::TruncatedPayload, "truncated payload: no raster data");
            }
            fail(PgmErrorKind::MalformedHeader, "malformed header: missing raster separator");
        }
        rest.remove_prefix(1);
        if (rest.size() < count) {
            fail(PgmErrorKind::TruncatedPayload, "truncated payload: expected " +
                                                     std::to_string(count) + " bytes, got " +
                                                     std::to_string(rest.size()));
        }
        for (std::size_t k = 0; k < count; ++k) {
            auto v = static_cast<Gray>(rest[k]);
            if (v > *maxval) {
                fail(PgmErrorKind::MalformedHeader, "pixel value exceeds maxval");
            }
            pixels.push_back(v);
        }
    } else {
        for (std::size_t k = 0; k < count; ++k) {
            if (in.atEnd()) {
                fail(PgmErrorKind::TruncatedPayload, "truncated payload: expected " +
                                                         std::to_string(count) + " values, got " +
                                                         std::to_string(k));
            }
            auto v = in.number();
            if (!v) {
                fail(PgmErrorKind::MalformedHeader, "malformed raster value");
            }
            if (*v > *maxval) {
                fail(PgmErrorKind::MalformedHeader, "pixel value exceeds maxval");
            }
            pixels.push_back(static_cast<Gray>(*v));
        }
    }
    return Image(*height, *width, std::move(pixels));
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view bytes)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

Image load_pgm_file(const std::filesystem::path& path)
{
    return load_pgm(read_file(path));
}

std::string to_pgm_ascii(const Image& img)
{
    std::ostringstream out;
    out << "P2\n" << img.width() << ' ' << img.height() << "\n255\n";
    for (std::size_t i = 0; i < img.height(); ++i) {
        for (std::size_t j = 0; j < img.width(); ++j) {
            out << (j ? " " : "") << static_cast<unsigned>(img(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string to_pgm_binary(const Image& img)
{
    std::string out = "P5\n" + std::to_string(img.width()) + ' ' + std::to_string(img.height()) +
                      "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels().data()), img.size());
    return out;
}

} // namespace ridge
