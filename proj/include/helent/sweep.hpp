#pragma once

#include <string>
#include <vector>

#include "helent/config.hpp"
#include "helent/entanglement.hpp"

namespace helent {

struct SweepRow {
  double v;
  double eta;  // -atanh(v) <= 0
  double concurrence;
  double purity;
  double entropy_a;
  double entropy_b;
  double plateau_delta;  // |headline value - same at refined grid|
};

struct SweepResult {
  ScenarioConfig config;
  std::vector<SweepRow> rows;
  std::string report;  // config echo, version, wall time, annotations
  double wall_seconds = 0.0;
};

/// Annotation attached to every product-state sweep report. The boost acts
/// node-wise as a local unitary on each particle, so a product amplitude
/// keeps an exactly factorized reduced matrix and zero concurrence at every
/// speed; the column only shows the quadrature floor.
extern const char* const kProductStateNote;

/// Boost-speed sweep for a two-particle scenario. Deterministic: identical
/// config gives byte-identical CSV for any thread count.
SweepResult run_sweep(const ScenarioConfig& config,
                      const ExecPolicy& policy = {});

/// Single-particle sweep (packet_a / helicity_a of a product spec): reduced
/// 2x2 matrix per speed; entropy_a is the marginal entropy, concurrence and
/// entropy_b are fixed at zero.
SweepResult run_single(const ScenarioConfig& config,
                       const ExecPolicy& policy = {});

/// CSV schema: header `v,eta,concurrence,purity,entropy_a,entropy_b,plateau_delta`,
/// 17 significant digits, '\n' endings, no trailing separator.
std::string to_csv(const SweepResult& result);
void write_csv(const SweepResult& result, const std::string& path);

/// States as built by the sweep drivers (exposed for tests).
TwoParticleState build_state(const ScenarioConfig& config,
                             std::shared_ptr<const MomentumGrid> grid);
SingleParticleAmplitude build_single_amplitude(
    const ScenarioConfig& config, std::shared_ptr<const MomentumGrid> grid);

}  // namespace helent
