// Serial reference vs OpenMP kernel, and one full sweep row.

#include <benchmark/benchmark.h>

#include <memory>

#include "helent/entanglement.hpp"
#include "helent/sweep.hpp"

namespace {

using helent::Mode;

struct Fixture {
  std::shared_ptr<const helent::MomentumGrid> grid;
  helent::TwoParticleState state;

  Fixture()
      : grid(std::make_shared<const helent::MomentumGrid>(
            helent::build_grid(32, 32, 8, 8.0))),
        state(helent::correlated_state(helent::WavePacket(1.0),
                                       helent::WavePacket(0.5), grid)) {}
};

const Fixture& fixture() {
  static Fixture f;
  return f;
}

void BM_cross_moments_reference(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    auto m = helent::boosted_cross_moments_reference(
        -1.0, Mode::helicity, std::span(f.state.a_factors()));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_cross_moments_reference)->Unit(benchmark::kMillisecond);

void BM_cross_moments_serial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    auto m = helent::boosted_cross_moments(-1.0, Mode::helicity,
                                           std::span(f.state.a_factors()),
                                           {false, 0});
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_cross_moments_serial)->Unit(benchmark::kMillisecond);

void BM_cross_moments_parallel(benchmark::State& state) {
  const auto& f = fixture();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = helent::boosted_cross_moments(-1.0, Mode::helicity,
                                           std::span(f.state.a_factors()),
                                           {true, threads});
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_cross_moments_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_reduced_two(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    auto rho = helent::reduced_two(f.state, -1.0, Mode::helicity);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_reduced_two)->Unit(benchmark::kMillisecond);

void BM_sweep_row_with_plateau(benchmark::State& state) {
  helent::ScenarioConfig cfg;
  cfg.state = helent::StateKind::correlated;
  cfg.epsilon_1 = cfg.epsilon_2 = 1.0;
  cfg.speeds = {0.5};
  cfg.refine = 2.0;
  for (auto _ : state) {
    auto result = helent::run_sweep(cfg);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_sweep_row_with_plateau)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
