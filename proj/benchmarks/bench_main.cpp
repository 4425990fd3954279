#include <array>
#include <random>

#include <benchmark/benchmark.h>

#include "ridge/direction.hpp"
#include "ridge/gradient.hpp"
#include "ridge/orientation.hpp"
#include "ridge/pipeline.hpp"
#include "ridge/sad.hpp"
#include "ridge/synth.hpp"

namespace {

const ridge::OffsetRom& default_rom()
{
    static const ridge::OffsetRom rom = ridge::generate_offset_rom(ridge::build_direction_set(16), 8);
    return rom;
}

void BM_Sdcu(benchmark::State& state)
{
    std::mt19937 rng(1);
    std::array<ridge::Gray, 8> nb{};
    for (auto& v : nb) {
        v = static_cast<ridge::Gray>(rng());
    }
    ridge::Gray c = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ridge::sdcu(c++, nb));
    }
}
BENCHMARK(BM_Sdcu);

void BM_SdVector(benchmark::State& state)
{
    const ridge::Image img = ridge::make_noise(64, 64, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ridge::compute_sd_vector(img, 32, 32, default_rom()));
    }
}
BENCHMARK(BM_SdVector);

void BM_EstimateField(benchmark::State& state)
{
    const auto side = static_cast<std::size_t>(state.range(0));
    const ridge::Image img = ridge::make_sinusoid(side, side, {30.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ridge::estimate_orientation_field(img, default_rom(), 16));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(side * side));
}
BENCHMARK(BM_EstimateField)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_RunPipeline(benchmark::State& state)
{
    const ridge::Image img = ridge::make_sinusoid(128, 128, {60.0});
    const ridge::PipelineConfig cfg = ridge::table_configs()[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        benchmark::DoNotOptimize(ridge::run_pipeline(img, default_rom(), cfg));
    }
}
BENCHMARK(BM_RunPipeline)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_GradientField(benchmark::State& state)
{
    const ridge::Image img = ridge::make_sinusoid(256, 256, {112.5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(ridge::gradient_orientation(img, 16));
    }
}
BENCHMARK(BM_GradientField)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
