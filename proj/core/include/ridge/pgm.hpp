#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ridge/image.hpp"

namespace ridge {

enum class PgmErrorKind {
    MalformedHeader,
    UnsupportedMaxval,
    TruncatedPayload,
};

class PgmError : public std::runtime_error {
public:
    PgmError(PgmErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }
    PgmErrorKind kind() const noexcept { return kind_; }

private:
    PgmErrorKind kind_;
};

/// Parses a binary (P5) or ASCII (P2) PGM. Pixel values are kept as stored;
/// a maxval below 255 does not rescale.
Image load_pgm(std::string_view bytes);

/// Throws std::runtime_error("cannot open ...") when the file is unreadable.
Image load_pgm_file(const std::filesystem::path& path);

std::string to_pgm_ascii(const Image& img);
std::string to_pgm_binary(const Image& img);

/// Reads a whole file into memory. Throws std::runtime_error("cannot open ...").
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

} // namespace ridge
