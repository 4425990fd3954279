#include "cli.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ridge/direction.hpp"
#include "ridge/field_io.hpp"
#include "ridge/gradient.hpp"
#include "ridge/overlay.hpp"
#include "ridge/pgm.hpp"
#include "ridge/pipeline.hpp"
#include "ridge/synth.hpp"

namespace ridge::cli {
namespace {

namespace fs = std::filesystem;

// Input-side failures that map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SharedParams {
    std::size_t directions = 16;
    std::size_t samples = 8;
    std::size_t blockSize = 16;
};

void add_shared(CLI::App& cmd, SharedParams& p)
{
    cmd.add_option("--N", p.directions, "Number of quantized directions over [0, 180)")->capture_default_str();
    cmd.add_option("--n", p.samples, "Pixels sampled per direction")->capture_default_str();
    cmd.add_option("--block-size", p.blockSize, "Block side in pixels")->capture_default_str();
}

struct InputSpec {
    std::string path;
    std::string synth;
    double angle = 0.0;
    double period = 8.0;
    std::vector<std::size_t> size{256, 256};
    std::uint32_t seed = 1;
    int value = 128;
};

void add_input(CLI::App& cmd, InputSpec& in, bool positional = true)
{
    if (positional) {
        cmd.add_option("input", in.path, "Input PGM (P2 or P5)");
    } else {
        cmd.add_option("--image", in.path, "Input PGM (P2 or P5)");
    }
    cmd.add_option("--synth", in.synth, "Generate the input instead: stripe, sinusoid, noise or uniform")
        ->check(CLI::IsMember({"stripe", "sinusoid", "noise", "uniform"}));
    cmd.add_option("--angle", in.angle, "Ridge angle in degrees for --synth")->capture_default_str();
    cmd.add_option("--period", in.period, "Pattern period in pixels for --synth")->capture_default_str();
    cmd.add_option("--size", in.size, "Height and width for --synth")->expected(2)->capture_default_str();
    cmd.add_option("--seed", in.seed, "Seed for --synth noise")->capture_default_str();
    cmd.add_option("--value", in.value, "Gray level for --synth uniform")->check(CLI::Range(0, 255));
}

bool has_input(const InputSpec& in)
{
    return !in.path.empty() || !in.synth.empty();
}

Image load_input(const InputSpec& in)
{
    if (!in.path.empty() && !in.synth.empty()) {
        throw UsageError("give either an input file or --synth, not both");
    }
    if (in.path.empty() && in.synth.empty()) {
        throw UsageError("no input: give a PGM path or --synth");
    }
    if (!in.path.empty()) {
        return load_pgm_file(in.path);
    }
    const std::size_t H = in.size.at(0);
    const std::size_t W = in.size.at(1);
    if (in.synth == "stripe") {
        return make_stripes(H, W, in.angle, in.period);
    }
    if (in.synth == "sinusoid") {
        return make_sinusoid(H, W, SinusoidSpec{in.angle, in.period});
    }
    if (in.synth == "noise") {
        return make_noise(H, W, in.seed);
    }
    return make_uniform(H, W, static_cast<Gray>(in.value));
}

struct Estimator {
    DirectionSet dirs;
    OffsetRom rom;
};

Estimator make_estimator(const SharedParams& p)
{
    Estimator e{build_direction_set(p.directions), {}};
    e.rom = generate_offset_rom(e.dirs, p.samples);
    if (p.blockSize == 0) {
        throw UsageError("block size must be at least 1");
    }
    return e;
}

void write_field_files(const fs::path& dir, const BlockDirectionImage& field, const DirectionSet& dirs,
                       std::ostream& out)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw UsageError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    write_file(dir / "field.txt", format_field_text(field, dirs));
    if (dirs.count() <= 16) {
        const PackedField packed = pack_field(field);
        write_file(dir / "field.bin", packed.indices);
        write_file(dir / "field.mask", packed.mask);
        out << "wrote " << (dir / "field.txt").string() << ", field.bin, field.mask\n";
    } else {
        out << "wrote " << (dir / "field.txt").string() << " (N > 16: no 4-bit binary dump)\n";
    }
}

int cmd_estimate(const SharedParams& p, const InputSpec& in, const std::string& outDir, std::ostream& out)
{
    const Estimator est = make_estimator(p);
    const Image img = load_input(in);
    const BlockDirectionImage field = estimate_orientation_field(img, est.rom, p.blockSize);
    out << "image " << img.height() << "x" << img.width() << ", " << field.rows() << "x" << field.cols()
        << " blocks, " << field.validCount() << " valid\n";
    write_field_files(outDir, field, est.dirs, out);
    return kSuccess;
}

struct RenderArgs {
    std::string fieldText;
    std::string fieldBin;
    std::string fieldMask;
    std::string svg;
    std::string ppm;
    std::string background;
};

int cmd_render(const SharedParams& p, const InputSpec& in, const RenderArgs& r, std::ostream& out)
{
    if (r.svg.empty() && r.ppm.empty()) {
        throw UsageError("nothing to render: give --svg and/or --ppm");
    }
    std::optional<Image> img;
    if (has_input(in)) {
        img = load_input(in);
    }

    BlockDirectionImage field;
    std::size_t directions = p.directions;
    if (!r.fieldText.empty()) {
        ParsedField parsed = parse_field_text(read_file(r.fieldText));
        field = std::move(parsed.field);
        directions = parsed.directions;
    } else if (!r.fieldBin.empty()) {
        if (!img || r.fieldMask.empty()) {
            throw UsageError("a binary field needs --mask and an image for its block grid");
        }
        field = unpack_field(read_file(r.fieldBin), read_file(r.fieldMask), partition_blocks(*img, p.blockSize));
    } else {
        throw UsageError("no field: give a field.txt path or --bin with --mask");
    }

    if (img && !(partition_blocks(*img, field.grid().blockSize) == field.grid())) {
        throw UsageError("grid mismatch: field is " + std::to_string(field.rows()) + "x" +
                         std::to_string(field.cols()) + " blocks, image gives " +
                         std::to_string(img->height() / field.grid().blockSize) + "x" +
                         std::to_string(img->width() / field.grid().blockSize));
    }
    const DirectionSet dirs = build_direction_set(directions);
    const std::size_t H = img ? img->height() : field.rows() * field.grid().blockSize;
    const std::size_t W = img ? img->width() : field.cols() * field.grid().blockSize;

    if (!r.svg.empty()) {
        write_file(r.svg, render_svg(field, dirs, H, W, r.background));
        out << "wrote " << r.svg << '\n';
    }
    if (!r.ppm.empty()) {
        const Image background = img ? *img : make_uniform(H, W, 255);
        write_file(r.ppm, to_ppm_binary(render_raster(background, field, dirs)));
        out << "wrote " << r.ppm << '\n';
    }
    return kSuccess;
}

struct SimulateArgs {
    unsigned rams = 1;
    bool registers = false;
    double clk1Ns = 1.0;
    std::string reservation;
    std::size_t maxTicks = 0;
    std::string outDir;
};

int cmd_simulate(const SharedParams& p, const InputSpec& in, const SimulateArgs& s, std::ostream& out,
                 std::ostream& err)
{
    const Estimator est = make_estimator(p);
    const PipelineConfig cfg{s.rams, s.registers, s.clk1Ns};
    validate(cfg);
    const Image img = load_input(in);
    const std::size_t entries = est.rom.size();

    out << "image " << img.height() << "x" << img.width() << ", Offset-ROM " << entries << " entries\n";
    out << "processing delay (CLK1 ticks, fill/drain excluded):\n";
    for (const PipelineConfig& c : table_configs()) {
        out << "  " << std::left << std::setw(40) << describe(c) << std::right << std::setw(14)
            << total_delay(c, img.height(), img.width(), entries) << "  (H x L x " << clk2_period(c, entries)
            << ")\n";
    }

    const PipelineRun run = run_pipeline(img, est.rom, cfg, p.blockSize);
    const double clk2Ns = static_cast<double>(clk2_period(cfg, entries)) * cfg.clk1PeriodNs;
    out << "selected: " << describe(cfg) << '\n'
        << "  fetch pulses per pixel: " << fetch_cycle_count(cfg, entries) << '\n'
        << "  CLK2 period: " << clk2_period(cfg, entries) << " CLK1 (" << clk2Ns << " ns)\n"
        << "  CLK2 ticks: " << run.clk2Ticks << '\n'
        << "  CLK1 ticks: " << run.clk1Ticks << " = steady " << run.steadyClk1Ticks << " + fill/drain "
        << run.drainClk1Ticks << '\n'
        << "  elapsed: " << std::fixed << std::setprecision(3) << static_cast<double>(run.clk1Ticks) * cfg.clk1PeriodNs / 1e6 << " ms\n" << std::defaultfloat
        << "  first stage3 result at CLK2 tick " << run.firstResultClk2 << '\n'
        << "  block outputs: " << run.blockOutputs << " (" << run.blockCounterBits << "-bit pulse counter)\n";

    if (!s.reservation.empty()) {
        write_file(s.reservation, run.table.to_csv(s.maxTicks));
        out << "wrote " << s.reservation << '\n';
    }
    if (!s.outDir.empty()) {
        write_field_files(s.outDir, run.field, est.dirs, out);
    }

    const BlockDirectionImage direct = estimate_orientation_field(img, est.rom, p.blockSize);
    const int rc = check_equivalence(run.field, direct, err);
    if (rc == kSuccess) {
        out << "  functional check vs direct estimator: identical\n";
    }
    return rc;
}

struct CompareArgs {
    std::string csv;
    std::string baseline = "gradient";
};

int cmd_compare(const SharedParams& p, const InputSpec& in, const CompareArgs& c, std::ostream& out)
{
    const Estimator est = make_estimator(p);
    const Image img = load_input(in);
    const BlockDirectionImage pixel = estimate_orientation_field(img, est.rom, p.blockSize);
    const AngleField estimate = to_angle_field(pixel, est.dirs);
    const AngleField reference = c.baseline == "pixel" ? estimate : gradient_orientation(img, p.blockSize);
    const ErrorReport rep = error_metric(reference, estimate);

    if (!c.csv.empty()) {
        std::ostringstream csv;
        csv.precision(10);
        csv << "row,col,g_deg,p_deg,diff_deg\n";
        for (std::size_t r = 0; r < reference.rows(); ++r) {
            for (std::size_t col = 0; col < reference.cols(); ++col) {
                const AngleCell& g = reference.at(r, col);
                const AngleCell& e = estimate.at(r, col);
                if (g.valid && e.valid) {
                    csv << r << ',' << col << ',' << g.degrees << ',' << e.degrees << ','
                        << angular_difference(g.degrees, e.degrees) << '\n';
                }
            }
        }
        write_file(c.csv, csv.str());
    }

    if (rep.validBlocks == 0) {
        out << "no valid blocks: nothing to compare (" << rep.rows << "x" << rep.cols << " blocks)\n";
        return kSuccess;
    }
    std::ostringstream line;
    line << std::fixed << std::setprecision(4);
    line << "blocks=" << rep.rows << "x" << rep.cols << " valid=" << rep.validBlocks
         << " mse_deg2=" << rep.meanSquaredError << " rms_deg=" << rep.rmsError
         << " mean_abs_deg=" << rep.meanAbsError << " max_abs_deg=" << rep.maxAbsError << '\n';
    out << line.str();
    return kSuccess;
}

int cmd_gen_offsets(const SharedParams& p, std::ostream& out)
{
    const Estimator est = make_estimator(p);
    out << format_offset_rom(est.rom);
    return kSuccess;
}

} // namespace

int check_equivalence(const BlockDirectionImage& pipeline, const BlockDirectionImage& direct, std::ostream& err)
{
    if (pipeline.rows() != direct.rows() || pipeline.cols() != direct.cols()) {
        err << "internal consistency error: pipeline field is " << pipeline.rows() << "x" << pipeline.cols()
            << ", direct field is " << direct.rows() << "x" << direct.cols() << '\n';
        return kInternalError;
    }
    for (std::size_t r = 0; r < direct.rows(); ++r) {
        for (std::size_t c = 0; c < direct.cols(); ++c) {
            const BlockResult& a = pipeline.at(r, c);
            const BlockResult& b = direct.at(r, c);
            if (!(a == b)) {
                err << "internal consistency error: block (" << r << ", " << c << ") pipeline d="
                    << a.direction.value << " valid=" << a.valid << ", direct d=" << b.direction.value
                    << " valid=" << b.valid << '\n';
                return kInternalError;
            }
        }
    }
    return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fingerprint ridge orientation by sum-of-absolute-differences direction voting", "ridge-orient"};
    app.require_subcommand(1);

    SharedParams shared;
    InputSpec input;

    std::string outDir = ".";
    auto* estimate = app.add_subcommand("estimate", "Estimate the block orientation field");
    add_shared(*estimate, shared);
    add_input(*estimate, input);
    estimate->add_option("-o,--output", outDir, "Directory for field.txt, field.bin, field.mask")
        ->capture_default_str();

    RenderArgs renderArgs;
    auto* render = app.add_subcommand("render", "Draw a field as line segments over the image");
    add_shared(*render, shared);
    add_input(*render, input, false);
    render->add_option("field", renderArgs.fieldText, "Field text file from estimate");
    render->add_option("--bin", renderArgs.fieldBin, "Packed 4-bit field (needs --mask and --image)");
    render->add_option("--mask", renderArgs.fieldMask, "Validity mask for --bin");
    render->add_option("--svg", renderArgs.svg, "SVG output path");
    render->add_option("--ppm", renderArgs.ppm, "PPM (P6) output path");
    render->add_option("--background", renderArgs.background, "Image href placed under the SVG lines");

    SimulateArgs simArgs;
    auto* simulate = app.add_subcommand("simulate", "Run the cycle-count pipeline model");
    add_shared(*simulate, shared);
    add_input(*simulate, input);
    simulate->add_option("--rams", simArgs.rams, "Replicated Image-RAMs (1 or 8)")->capture_default_str();
    simulate->add_flag("--registers", simArgs.registers, "Add the register bank between stage0 and stage1");
    simulate->add_option("--clk1-ns", simArgs.clk1Ns, "CLK1 period in ns")->capture_default_str();
    simulate->add_option("--reservation", simArgs.reservation, "Reservation table CSV output path");
    simulate->add_option("--max-ticks", simArgs.maxTicks, "Limit the CSV to the first N ticks (0 = all)");
    simulate->add_option("-o,--output", simArgs.outDir, "Also write the pipeline's field files here");

    CompareArgs compareArgs;
    auto* compare = app.add_subcommand("compare", "Compare against the gradient-based estimator");
    add_shared(*compare, shared);
    add_input(*compare, input);
    compare->add_option("--csv", compareArgs.csv, "Per-block CSV output path");
    compare->add_option("--baseline", compareArgs.baseline, "Reference field: gradient or pixel")
        ->check(CLI::IsMember({"gradient", "pixel"}))
        ->capture_default_str();

    auto* genOffsets = app.add_subcommand("gen-offsets", "Dump the Offset-ROM as `d k di dj` lines");
    add_shared(*genOffsets, shared);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kSuccess : kUsageError;
    }

    try {
        if (estimate->parsed()) {
            return cmd_estimate(shared, input, outDir, out);
        }
        if (render->parsed()) {
            return cmd_render(shared, input, renderArgs, out);
        }
        if (simulate->parsed()) {
            return cmd_simulate(shared, input, simArgs, out, err);
        }
        if (compare->parsed()) {
            return cmd_compare(shared, input, compareArgs, out);
        }
        return cmd_gen_offsets(shared, out);
    } catch (const std::logic_error& e) {
        // invalid_argument and out_of_range are precondition failures on user input.
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
            err << "error: " << e.what() << '\n';
            return kUsageError;
        }
        err << "internal consistency error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace ridge::cli
