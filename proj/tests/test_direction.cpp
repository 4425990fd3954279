#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ridge/direction.hpp"

using namespace ridge;

namespace {

std::set<std::pair<int, int>> offset_set(const OffsetRom& rom, std::size_t d)
{
    std::set<std::pair<int, int>> s;
    for (Offset o : rom.direction(d)) {
        s.insert({o.di, o.dj});
    }
    return s;
}

} // namespace

TEST_SUITE("direction")
{
    TEST_CASE("sixteen directions in 11.25 degree steps")
    {
        DirectionSet dirs = build_direction_set(16);
        REQUIRE(dirs.count() == 16);
        for (std::size_t d = 0; d < 16; ++d) {
            CHECK(dirs.angle(d) == doctest::Approx(11.25 * static_cast<double>(d)));
        }
        CHECK(dirs.angle(15) == 168.75);
        CHECK(std::is_sorted(dirs.angles().begin(), dirs.angles().end()));
    }

    TEST_CASE("two directions and invalid counts")
    {
        DirectionSet two = build_direction_set(2);
        CHECK(two.angle(0) == 0.0);
        CHECK(two.angle(1) == 90.0);
        CHECK_THROWS_AS(build_direction_set(3), std::invalid_argument);
        CHECK_THROWS_AS(build_direction_set(0), std::invalid_argument);
        CHECK_THROWS_AS(build_direction_set(1), std::invalid_argument);
    }

    TEST_CASE("horizontal, vertical and diagonal rows of the ROM")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        const std::vector<Offset> horizontal{{0, -4}, {0, -3}, {0, -2}, {0, -1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}};
        CHECK(std::equal(horizontal.begin(), horizontal.end(), rom.direction(0).begin()));
        CHECK(offset_set(rom, 8) ==
              std::set<std::pair<int, int>>{{-4, 0}, {-3, 0}, {-2, 0}, {-1, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
        CHECK(offset_set(rom, 4) ==
              std::set<std::pair<int, int>>{{-4, 4}, {-3, 3}, {-2, 2}, {-1, 1}, {1, -1}, {2, -2}, {3, -3}, {4, -4}});
    }

    TEST_CASE("ROM matches the independently generated table")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        REQUIRE(rom.size() == 128);
        for (std::size_t d = 0; d < 16; ++d) {
            std::set<std::pair<int, int>> expected(oracle::kRom16x8[d].begin(), oracle::kRom16x8[d].end());
            CHECK_MESSAGE(offset_set(rom, d) == expected, "direction " << d);
        }
    }

    TEST_CASE("ROM invariants across parameter choices")
    {
        for (std::size_t N : {2u, 4u, 6u, 8u, 12u, 16u, 24u, 32u}) {
            DirectionSet dirs = build_direction_set(N);
            for (std::size_t n : {2u, 4u, 6u, 8u, 10u, 16u, 32u}) {
                OffsetRom rom = generate_offset_rom(dirs, n);
                CAPTURE(N);
                CAPTURE(n);
                REQUIRE(rom.size() == N * n);
                for (std::size_t d = 0; d < N; ++d) {
                    auto s = offset_set(rom, d);
                    CHECK(s.size() == n); // distinct
                    CHECK(s.count({0, 0}) == 0);
                    for (auto [a, b] : s) {
                        CHECK(s.count({-a, -b}) == 1); // point symmetric
                        CHECK(std::max(std::abs(a), std::abs(b)) <= static_cast<int>(n / 2));
                    }
                    // Mirror: angle 180 - t is the column negation of t.
                    std::set<std::pair<int, int>> mirrored;
                    for (auto [a, b] : offset_set(rom, dirs.mirrored(DirectionIndex(d)).value)) {
                        mirrored.insert({a, -b});
                    }
                    CHECK(mirrored == s);
                }
            }
        }
    }

    TEST_CASE("transpose relation between direction d and N/2 - d")
    {
        DirectionSet dirs = build_direction_set(16);
        OffsetRom rom = generate_offset_rom(dirs, 8);
        for (std::size_t d = 0; d < 16; ++d) {
            std::set<std::pair<int, int>> swapped;
            for (auto [a, b] : offset_set(rom, d)) {
                swapped.insert({b, a});
            }
            CHECK(swapped == offset_set(rom, dirs.transposed(DirectionIndex(d)).value));
        }
    }

    TEST_CASE("ROM precondition on n")
    {
        DirectionSet dirs = build_direction_set(16);
        CHECK_THROWS_AS(generate_offset_rom(dirs, 7), std::invalid_argument);
        CHECK_THROWS_AS(generate_offset_rom(dirs, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_offset_rom(dirs, 256), std::out_of_range);
        CHECK(generate_offset_rom(dirs, 254).size() == 16 * 254);
    }

    TEST_CASE("neighbor addresses are flagged outside the image")
    {
        Image img(256, 256);
        auto a = neighbor_address(10, 10, Offset{-4, 0}, img);
        CHECK(a.valid);
        CHECK(a.row == 6);
        CHECK(a.col == 10);
        CHECK_FALSE(neighbor_address(2, 2, Offset{-4, 0}, img).valid);
        CHECK_FALSE(neighbor_address(255, 255, Offset{0, 4}, img).valid);
        CHECK(neighbor_address(255, 255, Offset{0, -4}, img).valid);
    }

    TEST_CASE("gen-offsets text format")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        const std::string text = format_offset_rom(rom);
        CHECK(std::count(text.begin(), text.end(), '\n') == 128);
        CHECK(text.rfind("0 0 0 -4\n0 1 0 -3\n", 0) == 0);

        std::istringstream in(format_offset_rom(generate_offset_rom(build_direction_set(2), 2)));
        int d, k, di, dj, lines = 0;
        while (in >> d >> k >> di >> dj) {
            ++lines;
            CHECK(std::abs(di) + std::abs(dj) == 1);
        }
        CHECK(lines == 4);
    }
}
