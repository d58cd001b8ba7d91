#pragma once

#include <string>
#include <vector>

namespace helent {

struct ValidateOptions {
  /// Test fixture: corrupt one entry sign of sigma_y in the spin-flip
  /// operator so the flip/concurrence checks must fail.
  bool corrupt_spin_flip_sign = false;
};

struct ValidateCheck {
  std::string name;
  double observed;
  double tolerance;
  bool pass;
};

struct ValidateInfo {
  std::string name;
  double observed;  // diagnostic only, no pass/fail
};

struct ValidateReport {
  std::vector<ValidateCheck> checks;
  std::vector<ValidateInfo> infos;
  bool all_pass = false;
  std::string text;  // machine-readable line-per-check rendering
};

/// Runs the full property suite: representation unitarity, closed-form
/// oracles, collinear cases, rotation invariance, cocycle composition,
/// quadrature normalization, concurrence unit cases, separability of
/// product states and dense-vs-low-rank equivalence.
ValidateReport validate(const ValidateOptions& options = {});

}  // namespace helent
