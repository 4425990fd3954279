#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "ridge/field_io.hpp"
#include "ridge/pgm.hpp"
#include "ridge/synth.hpp"

using namespace ridge;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    fs::path p = fs::temp_directory_path() / ("ridge_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("gen-offsets")
    {
        Result r = run_cli({"gen-offsets"});
        CHECK(r.code == 0);
        CHECK(count_lines(r.out) == 128);
        Result two = run_cli({"gen-offsets", "--N", "2", "--n", "2"});
        CHECK(two.code == 0);
        CHECK(count_lines(two.out) == 4);
        Result bad = run_cli({"gen-offsets", "--N", "3"});
        CHECK(bad.code == 2);
        CHECK(bad.err.find("N must be even") != std::string::npos);
    }

    TEST_CASE("estimate writes text and binary fields")
    {
        fs::path dir = scratch("estimate");
        write_file(dir / "in.pgm", to_pgm_binary(make_stripes(256, 256, 0.0, 2.0)));
        Result r = run_cli({"estimate", (dir / "in.pgm").string(), "-o", (dir / "out").string()});
        REQUIRE(r.code == 0);
        ParsedField parsed = parse_field_text(read_file(dir / "out" / "field.txt"));
        CHECK(parsed.field.rows() == 16);
        CHECK(parsed.field.cols() == 16);
        for (const auto& b : parsed.field.cells()) {
            CHECK(b.valid);
            CHECK(b.direction.value == 0);
        }
        BlockDirectionImage fromBinary = unpack_field(read_file(dir / "out" / "field.bin"),
                                                      read_file(dir / "out" / "field.mask"), parsed.field.grid());
        CHECK(fromBinary == parsed.field);
    }

    TEST_CASE("estimate input errors exit 2")
    {
        Result missing = run_cli({"estimate", "/nonexistent/in.pgm", "-o", scratch("missing").string()});
        CHECK(missing.code == 2);
        CHECK(missing.err.find("cannot open") != std::string::npos);

        fs::path dir = scratch("n_check");
        Result six = run_cli({"estimate", "--synth", "sinusoid", "--size", "64", "64", "--n", "6", "-o", dir.string()});
        CHECK(six.code == 0);
        Result seven = run_cli({"estimate", "--synth", "sinusoid", "--size", "64", "64", "--n", "7", "-o", dir.string()});
        CHECK(seven.code == 2);
        CHECK(seven.err.find("n must be even") != std::string::npos);

        CHECK(run_cli({"estimate"}).code == 2);
        CHECK(run_cli({"no-such-command"}).code == 2);
        CHECK(run_cli({"estimate", "--synth", "checkerboard"}).code == 2);
        CHECK(run_cli({"estimate", "--synth", "uniform", "--size", "8", "8", "-o", dir.string()}).code == 2);
    }

    TEST_CASE("outputs are deterministic")
    {
        fs::path a = scratch("det_a");
        fs::path b = scratch("det_b");
        for (const fs::path& dir : {a, b}) {
            REQUIRE(run_cli({"estimate", "--synth", "noise", "--seed", "3", "--size", "96", "80", "-o", dir.string()}).code == 0);
        }
        for (const char* f : {"field.txt", "field.bin", "field.mask"}) {
            CHECK(read_file(a / f) == read_file(b / f));
        }
    }

    TEST_CASE("estimate then render round trip")
    {
        fs::path dir = scratch("render");
        write_file(dir / "in.pgm", to_pgm_ascii(make_sinusoid(64, 64, {45.0, 8.0})));
        REQUIRE(run_cli({"estimate", (dir / "in.pgm").string(), "-o", dir.string()}).code == 0);

        Result r = run_cli({"render", (dir / "field.txt").string(), "--image", (dir / "in.pgm").string(), "--svg",
                            (dir / "o.svg").string(), "--ppm", (dir / "o.ppm").string()});
        CHECK(r.code == 0);
        const std::string svg = read_file(dir / "o.svg");
        std::size_t lines = 0;
        for (auto pos = svg.find("<line"); pos != std::string::npos; pos = svg.find("<line", pos + 1)) {
            ++lines;
        }
        CHECK(lines == parse_field_text(read_file(dir / "field.txt")).field.validCount());
        CHECK(read_file(dir / "o.ppm").rfind("P6\n64 64\n255\n", 0) == 0);

        Result fromBin = run_cli({"render", "--bin", (dir / "field.bin").string(), "--mask",
                                  (dir / "field.mask").string(), "--image", (dir / "in.pgm").string(), "--svg",
                                  (dir / "b.svg").string()});
        CHECK(fromBin.code == 0);
        CHECK(read_file(dir / "b.svg") == svg);

        write_file(dir / "big.pgm", to_pgm_binary(make_uniform(96, 64, 0)));
        Result mismatch = run_cli({"render", (dir / "field.txt").string(), "--image", (dir / "big.pgm").string(),
                                   "--svg", (dir / "x.svg").string()});
        CHECK(mismatch.code == 2);
        CHECK(mismatch.err.find("grid mismatch") != std::string::npos);
    }

    TEST_CASE("simulate reports the four delays and checks equivalence")
    {
        fs::path dir = scratch("simulate");
        Result r = run_cli({"simulate", "--synth", "sinusoid", "--angle", "22.5", "--size", "256", "256", "--rams",
                            "8", "--registers", "--reservation", (dir / "res.csv").string(), "--max-ticks", "10"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("16777216") != std::string::npos);
        CHECK(r.out.find("8388608") != std::string::npos);
        CHECK(r.out.find("2097152") != std::string::npos);
        CHECK(r.out.find("1048576") != std::string::npos);
        CHECK(r.out.find("identical") != std::string::npos);
        CHECK(count_lines(read_file(dir / "res.csv")) == 11);

        CHECK(run_cli({"simulate", "--synth", "noise", "--size", "32", "32", "--rams", "4"}).code == 2);
    }

    TEST_CASE("equivalence failure maps to exit 3")
    {
        BlockDirectionImage a(BlockGrid{16, 2, 2});
        BlockDirectionImage b = a;
        std::ostringstream err;
        CHECK(cli::check_equivalence(a, b, err) == 0);
        b.at(1, 0) = {DirectionIndex(3), true};
        CHECK(cli::check_equivalence(a, b, err) == 3);
        CHECK(err.str().find("block (1, 0)") != std::string::npos);
        CHECK(cli::check_equivalence(a, BlockDirectionImage(BlockGrid{16, 1, 2}), err) == 3);
    }

    TEST_CASE("compare")
    {
        fs::path dir = scratch("compare");
        Result sin45 = run_cli({"compare", "--synth", "sinusoid", "--angle", "45", "--csv", (dir / "c.csv").string()});
        REQUIRE(sin45.code == 0);
        const auto pos = sin45.out.find("mean_abs_deg=");
        REQUIRE(pos != std::string::npos);
        CHECK(std::stod(sin45.out.substr(pos + 13)) <= 3.0);
        const std::string csv = read_file(dir / "c.csv");
        CHECK(csv.rfind("row,col,g_deg,p_deg,diff_deg\n", 0) == 0);
        CHECK(count_lines(csv) == 257);

        Result self = run_cli({"compare", "--synth", "noise", "--baseline", "pixel"});
        CHECK(self.code == 0);
        CHECK(self.out.find("mse_deg2=0.0000") != std::string::npos);
        CHECK(self.out.find("mean_abs_deg=0.0000") != std::string::npos);

        Result uniform = run_cli({"compare", "--synth", "uniform"});
        CHECK(uniform.code == 0);
        CHECK(uniform.out.find("no valid blocks") != std::string::npos);
    }
}
