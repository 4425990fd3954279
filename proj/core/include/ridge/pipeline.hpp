#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ridge/direction.hpp"
#include "ridge/image.hpp"
#include "ridge/orientation.hpp"

namespace ridge {

/// Hardware assets of the pipeline. Only timing depends on these; the
/// computed orientation field does not.
struct PipelineConfig {
    unsigned imageRamCount = 1;       // 1 or 8 replicated Image-RAMs
    bool interstageRegisters = false; // extra register bank between stage0 and stage1
    double clk1PeriodNs = 1.0;

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// Throws std::invalid_argument unless imageRamCount is 1 or 8 and the
/// CLK1 period is positive.
void validate(const PipelineConfig& cfg);

inline constexpr std::size_t kDefaultRomEntries = 128; // 16 directions x 8 pixels

/// CLK1 pulses stage0 needs to load one pixel's neighborhood: one pulse per
/// ROM entry and bank, so 128 with one RAM and 16 with eight.
std::uint64_t fetch_cycle_count(const PipelineConfig& cfg, std::size_t romEntries = kDefaultRomEntries);

/// CLK2 period in CLK1 ticks. Without the inter-stage registers a CLK2
/// cycle holds a fetch half and a compute half (2 x fetch); with them the
/// fetch of the next pixel overlaps the compute of the current one.
std::uint64_t clk2_period(const PipelineConfig& cfg, std::size_t romEntries = kDefaultRomEntries);

/// Steady-state processing delay in CLK1 ticks for an H x L image, fill and
/// drain excluded: H * L * {256, 128, 32, 16} for the four configurations.
std::uint64_t total_delay(const PipelineConfig& cfg, std::size_t H, std::size_t L,
                          std::size_t romEntries = kDefaultRomEntries);

/// The four configurations in table order: (1 RAM, no regs), (1 RAM, regs),
/// (8 RAMs, no regs), (8 RAMs, regs).
std::array<PipelineConfig, 4> table_configs();
std::string describe(const PipelineConfig& cfg);

struct Fetch {
    std::uint32_t pulse = 0;  // CLK1 pulse within the fill
    std::uint32_t bank = 0;   // Image-RAM replica serving the read
    std::uint32_t entry = 0;  // ROM entry, d * n + k
    std::ptrdiff_t row = 0;
    std::ptrdiff_t col = 0;
    std::size_t address = 0;  // row * L + col, meaningful only when valid
    bool valid = false;
};

/// Reads issued by stage0 for pixel (i, j) in ROM order. With R banks, fetch
/// k goes to bank k mod R on pulse k / R.
std::vector<Fetch> address_stream(std::size_t i, std::size_t j, const OffsetRom& rom,
                                  const PipelineConfig& cfg, const Image& img);

inline constexpr std::size_t kStageCount = 4;

/// Stage occupancy per CLK2 tick; each cell holds the pixel id (row * L +
/// col) being processed, or kIdle.
class ReservationTable {
public:
    static constexpr std::int64_t kIdle = -1;
    using Row = std::array<std::int64_t, kStageCount>;

    void push(const Row& r) { rows_.push_back(r); }
    std::size_t ticks() const noexcept { return rows_.size(); }
    const Row& at(std::size_t tick) const { return rows_.at(tick); }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    /// `tick,stage0,stage1,stage2,stage3`, idle cells as `-`. At most
    /// maxTicks rows when non-zero.
    std::string to_csv(std::size_t maxTicks = 0) const;

private:
    std::vector<Row> rows_;
};

struct PipelineRun {
    BlockDirectionImage field;
    ReservationTable table;
    std::uint64_t clk2Ticks = 0;       // including fill and drain
    std::uint64_t clk1Ticks = 0;       // clk2Ticks * clk2 period
    std::uint64_t steadyClk1Ticks = 0; // equals total_delay
    std::uint64_t drainClk1Ticks = 0;  // (kStageCount - 1) CLK2 cycles
    std::uint64_t firstResultClk2 = 0; // tick at which stage3 first holds a pixel
    std::size_t blockOutputs = 0;      // emissions of the block pulse counter
    unsigned blockCounterBits = 0;     // 9 for 16x16 blocks
};

/// Streams every pixel of `img` through the four stages. Pixels of full
/// blocks are issued block by block in raster order within the block;
/// pixels outside the block grid follow and are processed but not counted.
PipelineRun run_pipeline(const Image& img, const OffsetRom& rom, const PipelineConfig& cfg,
                         std::size_t blockSize = 16);

} // namespace ridge
