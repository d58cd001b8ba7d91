#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "helent/reduce.hpp"
#include "helent/states.hpp"

namespace helent {

enum class StateKind { product, correlated, custom };

/// One term of a custom low-rank state: coeff * packet_a |h_a> (x) packet_b |h_b>.
struct CustomTerm {
  std::complex<double> coeff;
  double epsilon_a;
  Helicity h_a;
  double epsilon_b;
  Helicity h_b;
};

/// Scenario description consumed by the sweep drivers. Parsed from a flat
/// `key = value` file; see the README for the key list.
struct ScenarioConfig {
  StateKind state = StateKind::product;
  Mode mode = Mode::helicity;

  // product state
  double epsilon_a = 1.0;
  double epsilon_b = 1.0;
  Helicity helicity_a = Helicity::plus;
  Helicity helicity_b = Helicity::plus;

  // correlated state
  double epsilon_1 = 1.0;
  double epsilon_2 = 1.0;

  // custom state
  std::vector<CustomTerm> terms;

  Symmetrization symmetrize = Symmetrization::none;

  std::vector<double> speeds;  // ascending, each in [0, 1)
  double v_max = 0.98;
  int v_count = 50;

  int n_radial = 32;
  int n_polar = 32;
  int n_azimuthal = 8;
  double cutoff = 0.0;  // 0 = auto: 8 * largest packet width
  double refine = 2.0;  // grid refinement factor for the plateau column

  std::string output = "sweep.csv";

  /// Cutoff actually used; resolves the auto rule.
  double effective_cutoff() const;
  /// Largest packet width appearing in the state spec.
  double max_width() const;
};

ScenarioConfig parse_config(std::istream& in);
ScenarioConfig parse_config_file(const std::string& path);

std::string config_echo(const ScenarioConfig& config);

}  // namespace helent
