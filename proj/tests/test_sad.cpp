#include <cstdlib>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ridge/sad.hpp"
#include "ridge/synth.hpp"

using namespace ridge;

TEST_SUITE("sad")
{
    TEST_CASE("avd examples")
    {
        CHECK(avd(200, 50) == 150);
        CHECK(avd(0, 255) == 255);
        CHECK(avd(255, 0) == 255);
        for (int x = 0; x < 256; ++x) {
            CHECK(avd(static_cast<Gray>(x), static_cast<Gray>(x)) == 0);
        }
    }

    TEST_CASE("avd is |a - b| and symmetric over all 65536 pairs")
    {
        int mismatches = 0;
        for (int a = 0; a < 256; ++a) {
            for (int b = 0; b < 256; ++b) {
                const auto ga = static_cast<Gray>(a);
                const auto gb = static_cast<Gray>(b);
                mismatches += avd(ga, gb) != std::abs(a - b);
                mismatches += avd(ga, gb) != avd(gb, ga);
            }
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("adder tree widths")
    {
        static_assert(adder_tree_width(8) == 11);
        static_assert(adder_tree_width(4) == 10);
        static_assert(adder_tree_width(2) == 9);
        static_assert(adder_tree_width(1) == 8);
        static_assert(adder_tree_width(6) == 11);
    }

    TEST_CASE("sdcu examples")
    {
        const std::vector<Gray> all255(8, 255);
        CHECK(sdcu(0, all255) == 2040);
        CHECK(sdcu(0, all255) < (1u << 11));
        for (int c : {0, 17, 128, 255}) {
            const std::vector<Gray> same(8, static_cast<Gray>(c));
            CHECK(sdcu(static_cast<Gray>(c), same) == 0);
        }
        const std::vector<Gray> mixed{90, 110, 95, 105, 100, 100, 80, 120};
        CHECK(sdcu(100, mixed) == 70);
    }

    TEST_CASE("sdcu rejects the wrong neighbor count")
    {
        const std::vector<Gray> seven(7, 0);
        CHECK_THROWS_AS(sdcu(0, seven), std::invalid_argument);
        CHECK_NOTHROW(sdcu(0, std::span<const Gray>(seven).first(6), 6));
    }

    TEST_CASE("sdcu equals the wide sum on random inputs")
    {
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> gray(0, 255);
        int mismatches = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const auto center = static_cast<Gray>(gray(rng));
            std::vector<Gray> nb(8);
            unsigned wide = 0;
            for (auto& g : nb) {
                g = static_cast<Gray>(gray(rng));
                wide += static_cast<unsigned>(std::abs(int(center) - int(g)));
            }
            mismatches += sdcu(center, nb) != wide;
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("uniform image sums to zero")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        SdVector v = compute_sd_vector(make_uniform(32, 32, 128), 16, 16, rom);
        CHECK(v.complete(8));
        for (auto s : v.sums) {
            CHECK(s == 0);
        }
    }

    TEST_CASE("period-2 horizontal stripes")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        Image stripes = make_stripes(32, 32, 0.0, 2.0);
        REQUIRE(stripes(0, 5) == 255);
        REQUIRE(stripes(1, 5) == 0);
        SdVector v = compute_sd_vector(stripes, 16, 16, rom);
        auto naive = oracle::naive_sd(stripes, 16, 16, rom);
        CHECK(v.sums[0] == 0);
        // Neighbors at rows +-1 and +-3 differ by 255, rows +-2 and +-4 do not.
        CHECK(naive.sums[8] == 1020);
        CHECK(v.sums[8] == 1020);
        for (std::size_t d = 0; d < 16; ++d) {
            CHECK(v.sums[d] == naive.sums[d]);
        }
    }

    TEST_CASE("rotating stripes by 90 degrees swaps directions 0 and 8")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        Image h = make_stripes(32, 32, 0.0, 2.0);
        Image v = transposed(h);
        SdVector sh = compute_sd_vector(h, 16, 16, rom);
        SdVector sv = compute_sd_vector(v, 16, 16, rom);
        CHECK(sh.sums[0] == sv.sums[8]);
        CHECK(sh.sums[8] == sv.sums[0]);
    }

    TEST_CASE("sums bounded by 255 * validCount and equal to the naive oracle")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        std::mt19937 rng(11);
        for (int img_no = 0; img_no < 5; ++img_no) {
            Image img = make_noise(24, 24, static_cast<std::uint32_t>(rng()));
            for (std::size_t i = 0; i < 24; ++i) {
                for (std::size_t j = 0; j < 24; ++j) {
                    SdVector v = compute_sd_vector(img, i, j, rom);
                    auto naive = oracle::naive_sd(img, static_cast<long>(i), static_cast<long>(j), rom);
                    CHECK(v.complete(8) == naive.complete);
                    for (std::size_t d = 0; d < 16; ++d) {
                        CHECK(v.sums[d] <= 255u * v.validCount[d]);
                        CHECK(v.sums[d] == naive.sums[d]);
                    }
                }
            }
        }
    }

    TEST_CASE("border pixels count only in-bounds neighbors")
    {
        OffsetRom rom = generate_offset_rom(build_direction_set(16), 8);
        SdVector v = compute_sd_vector(make_uniform(16, 16, 9), 1, 1, rom);
        CHECK_FALSE(v.complete(8));
        CHECK(v.validCount[0] == 5); // columns -3, -2, -1 are off the image
        CHECK(v.validCount[8] == 5);
    }
}
