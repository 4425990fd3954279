#include "ridge/field_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ridge {
namespace {

constexpr std::uint8_t kInvalidNibble = 0xF;

std::size_t header_value(const std::string& header, const std::string& key)
{
    const std::string tag = key + "=";
    auto pos = header.find(tag);
    if (pos == std::string::npos) {
        throw std::runtime_error("field: header missing " + key);
    }
    return std::stoul(header.substr(pos + tag.size()));
}

} // namespace

std::string format_field_text(const BlockDirectionImage& field, const DirectionSet& dirs)
{
    std::ostringstream out;
    out.precision(10);
    out << "# ridge-field rows=" << field.rows() << " cols=" << field.cols()
        << " block=" << field.grid().blockSize << " directions=" << dirs.count() << '\n';
    for (std::size_t r = 0; r < field.rows(); ++r) {
        for (std::size_t c = 0; c < field.cols(); ++c) {
            const auto& b = field.at(r, c);
            out << r << ' ' << c << ' ' << b.direction.value << ' ' << dirs.angle(b.direction) << ' '
                << (b.valid ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

ParsedField parse_field_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header) || header.rfind("# ridge-field", 0) != 0) {
        throw std::runtime_error("field: missing '# ridge-field' header");
    }
    BlockGrid grid;
    ParsedField parsed;
    try {
        grid.rows = header_value(header, "rows");
        grid.cols = header_value(header, "cols");
        grid.blockSize = header_value(header, "block");
        parsed.directions = header_value(header, "directions");
    } catch (const std::logic_error&) {
        throw std::runtime_error("field: malformed header");
    }
    parsed.field = BlockDirectionImage(grid);

    std::vector<bool> seen(grid.count(), false);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::size_t r = 0, c = 0, d = 0;
        double angle = 0;
        int valid = 0;
        if (!(ls >> r >> c >> d >> angle >> valid) || r >= grid.rows || c >= grid.cols ||
            d >= parsed.directions || (valid != 0 && valid != 1)) {
            throw std::runtime_error("field: bad line '" + line + "'");
        }
        seen[r * grid.cols + c] = true;
        parsed.field.at(r, c) = BlockResult{DirectionIndex(d), valid == 1};
    }
    for (bool s : seen) {
        if (!s) {
            throw std::runtime_error("field: missing block lines");
        }
    }
    return parsed;
}

PackedField pack_field(const BlockDirectionImage& field)
{
    PackedField p;
    const auto cells = field.cells();
    p.indices.assign((cells.size() + 1) / 2, '\0');
    p.mask.reserve(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& b = cells[k];
        if (b.valid && b.direction.value > 0xF) {
            throw std::invalid_argument("pack_field: direction index does not fit in 4 bits");
        }
        const std::uint8_t nibble = b.valid ? static_cast<std::uint8_t>(b.direction.value) : kInvalidNibble;
        auto& byte = reinterpret_cast<std::uint8_t&>(p.indices[k / 2]);
        byte |= (k % 2 == 0) ? static_cast<std::uint8_t>(nibble << 4) : nibble;
        p.mask.push_back(b.valid ? '\1' : '\0');
    }
    if (cells.size() % 2 != 0) {
        reinterpret_cast<std::uint8_t&>(p.indices.back()) |= kInvalidNibble;
    }
    return p;
}

BlockDirectionImage unpack_field(std::string_view indices, std::string_view mask, const BlockGrid& grid)
{
    const std::size_t count = grid.count();
    if (indices.size() != (count + 1) / 2 || mask.size() != count) {
        throw std::runtime_error("field: binary size does not match a " + std::to_string(grid.rows) +
                                 "x" + std::to_string(grid.cols) + " grid");
    }
    BlockDirectionImage field(grid);
    for (std::size_t k = 0; k < count; ++k) {
        const auto byte = static_cast<std::uint8_t>(indices[k / 2]);
        const std::uint8_t nibble = (k % 2 == 0) ? (byte >> 4) : (byte & 0xF);
        const bool valid = mask[k] != '\0';
        field.at(k / grid.cols, k % grid.cols) =
            BlockResult{valid ? DirectionIndex(nibble) : DirectionIndex(0), valid};
    }
    return field;
}

} // namespace ridge
