#pragma once

#include <string>

#include "helent/reduce.hpp"
#include "helent/spinrep.hpp"

namespace helent {

/// Snapshot of one boosted little-group element, for the `matrix` CLI
/// subcommand and for debugging.
struct MatrixReport {
  SpinorMatrix d;               // D[Z] or D[W] at the given (eta, tau, theta, phi)
  double unitarity;             // ||D^dag D - I||_inf
  BoostedAngles angles;         // boosted rapidity and polar angle
  SpinorMatrix closed_form;     // five-factor product at phi = 0
  double closed_form_deviation; // min over sign of ||closed - D(phi=0)||_inf
  double phi_deviation;         // ||D(phi) - D(phi=0)||_inf
  std::string text;             // printable rendering of all of the above
};

MatrixReport inspect_matrix(double eta, double tau, double theta, double phi,
                            Mode mode);

}  // namespace helent
