#include "ridge/pipeline.hpp"

#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ridge/sad.hpp"

namespace ridge {

void validate(const PipelineConfig& cfg)
{
    if (cfg.imageRamCount != 1 && cfg.imageRamCount != 8) {
        throw std::invalid_argument("image RAM count must be 1 or 8 (got " +
                                    std::to_string(cfg.imageRamCount) + ")");
    }
    if (!(cfg.clk1PeriodNs > 0.0)) {
        throw std::invalid_argument("CLK1 period must be positive");
    }
}

std::uint64_t fetch_cycle_count(const PipelineConfig& cfg, std::size_t romEntries)
{
    validate(cfg);
    return (romEntries + cfg.imageRamCount - 1) / cfg.imageRamCount;
}

std::uint64_t clk2_period(const PipelineConfig& cfg, std::size_t romEntries)
{
    const std::uint64_t fetch = fetch_cycle_count(cfg, romEntries);
    return cfg.interstageRegisters ? fetch : 2 * fetch;
}

std::uint64_t total_delay(const PipelineConfig& cfg, std::size_t H, std::size_t L, std::size_t romEntries)
{
    return static_cast<std::uint64_t>(H) * L * clk2_period(cfg, romEntries);
}

std::array<PipelineConfig, 4> table_configs()
{
    return {PipelineConfig{1, false, 1.0}, PipelineConfig{1, true, 1.0}, PipelineConfig{8, false, 1.0},
            PipelineConfig{8, true, 1.0}};
}

std::string describe(const PipelineConfig& cfg)
{
    return std::to_string(cfg.imageRamCount) + (cfg.imageRamCount == 1 ? " RAM" : " RAMs") +
           (cfg.interstageRegisters ? ", with" : ", without") + " inter-stage registers";
}

std::vector<Fetch> address_stream(std::size_t i, std::size_t j, const OffsetRom& rom,
                                  const PipelineConfig& cfg, const Image& img)
{
    validate(cfg);
    const auto entries = rom.entries();
    std::vector<Fetch> out;
    out.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto a = neighbor_address(i, j, entries[k], img);
        Fetch f;
        f.pulse = static_cast<std::uint32_t>(k / cfg.imageRamCount);
        f.bank = static_cast<std::uint32_t>(k % cfg.imageRamCount);
        f.entry = static_cast<std::uint32_t>(k);
        f.row = a.row;
        f.col = a.col;
        f.valid = a.valid;
        f.address = a.valid ? static_cast<std::size_t>(a.row) * img.width() + static_cast<std::size_t>(a.col) : 0;
        out.push_back(f);
    }
    return out;
}

std::string ReservationTable::to_csv(std::size_t maxTicks) const
{
    std::ostringstream out;
    out << "tick,stage0,stage1,stage2,stage3\n";
    const std::size_t limit = maxTicks == 0 ? rows_.size() : std::min(maxTicks, rows_.size());
    for (std::size_t t = 0; t < limit; ++t) {
        out << t;
        for (auto id : rows_[t]) {
            out << ',';
            if (id == kIdle) {
                out << '-';
            } else {
                out << id;
            }
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct PixelTag {
    std::size_t row = 0;
    std::size_t col = 0;
    bool counted = false; // belongs to a full block
};

// stage0 -> stage1: the loaded register bank.
struct FetchLatch {
    bool busy = false;
    PixelTag pixel;
    Gray center = 0;
    std::vector<Gray> regs;
    std::vector<bool> regValid;
};

// stage1 -> stage2: survivors of the first switch layer.
struct SwitchLatch {
    bool busy = false;
    PixelTag pixel;
    std::vector<SwitchPayload> partial;
    bool complete = false;
};

// stage2 -> stage3: decoded direction, if the pixel votes.
struct DirectionLatch {
    bool busy = false;
    PixelTag pixel;
    std::optional<DirectionIndex> direction;
};

std::vector<PixelTag> ij_generator(const Image& img, const BlockGrid& grid)
{
    std::vector<PixelTag> order;
    order.reserve(img.size());
    const std::size_t bs = grid.blockSize;
    for (std::size_t br = 0; br < grid.rows; ++br) {
        for (std::size_t bc = 0; bc < grid.cols; ++bc) {
            for (std::size_t i = br * bs; i < (br + 1) * bs; ++i) {
                for (std::size_t j = bc * bs; j < (bc + 1) * bs; ++j) {
                    order.push_back({i, j, true});
                }
            }
        }
    }
    for (std::size_t i = 0; i < img.height(); ++i) {
        for (std::size_t j = 0; j < img.width(); ++j) {
            if (i >= grid.rows * bs || j >= grid.cols * bs) {
                order.push_back({i, j, false});
            }
        }
    }
    return order;
}

} // namespace

PipelineRun run_pipeline(const Image& img, const OffsetRom& rom, const PipelineConfig& cfg,
                         std::size_t blockSize)
{
    validate(cfg);
    const BlockGrid grid = partition_blocks(img, blockSize);
    if (grid.count() == 0) {
        throw std::invalid_argument("run_pipeline: image is smaller than one block");
    }

    const std::size_t N = rom.directions();
    const std::size_t n = rom.perDirection();
    const std::uint64_t fetchPulses = fetch_cycle_count(cfg, rom.size());
    const std::uint64_t period = clk2_period(cfg, rom.size());
    const auto idOf = [&](const PixelTag& p) {
        return static_cast<std::int64_t>(p.row * img.width() + p.col);
    };

    PipelineRun run;
    run.field = BlockDirectionImage(grid);
    // Wide enough to count to blockSize^2 (9 bits for 256).
    const std::uint64_t pixelsPerBlock = grid.pixelsPerBlock();
    run.blockCounterBits = static_cast<unsigned>(std::bit_width(pixelsPerBlock));
    const std::uint64_t counterMask = (std::uint64_t{1} << run.blockCounterBits) - 1;

    const std::vector<PixelTag> order = ij_generator(img, grid);

    FetchLatch latch0;
    SwitchLatch latch1;
    DirectionLatch latch2;
    DirectionHistogram counters(N);
    std::uint64_t blockPulseCounter = 0;
    std::size_t blockAddress = 0;
    bool firstResultSeen = false;

    std::vector<std::uint8_t> diffs(n);
    std::size_t next = 0;
    for (std::uint64_t tick = 0; next < order.size() || latch0.busy || latch1.busy || latch2.busy; ++tick) {
        ReservationTable::Row row{ReservationTable::kIdle, ReservationTable::kIdle,
                                  ReservationTable::kIdle, ReservationTable::kIdle};

        // stage3: counters and the Maximum block.
        if (latch2.busy) {
            row[3] = idOf(latch2.pixel);
            if (!firstResultSeen) {
                run.firstResultClk2 = tick;
                firstResultSeen = true;
            }
            if (latch2.pixel.counted) {
                if (latch2.direction) {
                    counters.vote(*latch2.direction);
                }
                blockPulseCounter = (blockPulseCounter + 1) & counterMask;
                if (blockPulseCounter == pixelsPerBlock) {
                    run.field.at(blockAddress / grid.cols, blockAddress % grid.cols) =
                        BlockResult{counters.winner(), counters.votes() > 0};
                    ++blockAddress;
                    ++run.blockOutputs;
                    counters.clear();
                    blockPulseCounter = 0;
                }
            }
            latch2.busy = false;
        }

        // stage2: remaining switch layers and the index decoder.
        if (latch1.busy) {
            row[2] = idOf(latch1.pixel);
            DirectionLatch out{true, latch1.pixel, std::nullopt};
            std::vector<SwitchPayload> layer = std::move(latch1.partial);
            while (layer.size() > 1) {
                layer = min_switch_layer(layer);
            }
            if (latch1.complete) {
                out.direction = layer.front().index;
            }
            latch2 = std::move(out);
            latch1.busy = false;
        }

        // stage1: N SdCUs and the first switch layer.
        if (latch0.busy) {
            row[1] = idOf(latch0.pixel);
            std::vector<SwitchPayload> payloads(N);
            bool complete = true;
            for (std::size_t d = 0; d < N; ++d) {
                for (std::size_t k = 0; k < n; ++k) {
                    const std::size_t e = d * n + k;
                    diffs[k] = latch0.regValid[e] ? avd(latch0.center, latch0.regs[e]) : 0;
                    complete = complete && latch0.regValid[e];
                }
                payloads[d] = SwitchPayload{adder_tree(diffs), DirectionIndex(d)};
            }
            latch1 = SwitchLatch{true, latch0.pixel, min_switch_layer(payloads), complete};
            latch0.busy = false;
        }

        // stage0: ij generator, Offset-ROM adders and Image-RAM reads.
        if (next < order.size()) {
            const PixelTag& p = order[next++];
            row[0] = idOf(p);
            FetchLatch f;
            f.busy = true;
            f.pixel = p;
            f.center = img(p.row, p.col);
            f.regs.assign(rom.size(), 0);
            f.regValid.assign(rom.size(), false);
            std::uint64_t pulses = 0;
            for (const Fetch& fe : address_stream(p.row, p.col, rom, cfg, img)) {
                if (fe.valid) {
                    f.regs[fe.entry] = img.pixels()[fe.address];
                    f.regValid[fe.entry] = true;
                }
                pulses = std::max<std::uint64_t>(pulses, fe.pulse + 1);
            }
            if (pulses != fetchPulses) {
                throw std::logic_error("stage0 fill took an unexpected number of pulses");
            }
            latch0 = std::move(f);
        }

        run.table.push(row);
        ++run.clk2Ticks;
    }

    run.clk1Ticks = run.clk2Ticks * period;
    run.steadyClk1Ticks = static_cast<std::uint64_t>(order.size()) * period;
    run.drainClk1Ticks = (kStageCount - 1) * period;
    return run;
}

} // namespace ridge
