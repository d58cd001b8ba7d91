#pragma once

#include <Eigen/Dense>

#include "helent/reduce.hpp"
#include "helent/states.hpp"

namespace helent {

using DensityMatrix2 = Eigen::Matrix2cd;
/// Two-qubit density matrix, basis order (++, +-, -+, --).
using DensityMatrix4 = Eigen::Matrix4cd;

/// Reduced one-particle helicity/spin matrix after a z-boost of rapidity
/// eta: integral of U(p) g(p) g(p)^dag U(p)^dag over the grid.
DensityMatrix2 reduced_single(const SingleParticleAmplitude& amplitude,
                              double eta, Mode mode,
                              const ExecPolicy& policy = {});

/// Reduced two-particle matrix via the factorized low-rank path:
/// rho' = sum_{kl} c_k conj(c_l) M^A(k,l) (x) M^B(k,l).
DensityMatrix4 reduced_two(const TwoParticleState& state, double eta,
                           Mode mode, const ExecPolicy& policy = {});

/// Brute-force evaluation over dense node-pair amplitudes; the oracle the
/// low-rank path is checked against.
DensityMatrix4 reduced_two_dense(const DenseTwoParticleState& state,
                                 double eta, Mode mode);

/// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y).
DensityMatrix4 spin_flip(const DensityMatrix4& rho);

/// Wootters concurrence: k_i are the descending square roots of the
/// eigenvalues of rho * spin_flip(rho); returns max(k1 - k2 - k3 - k4, 0).
double wootters_concurrence(const DensityMatrix4& rho);

/// Same computation with the flipped matrix supplied by the caller; lets
/// the validation suite inject a corrupted flip operator.
double concurrence_from_flipped(const DensityMatrix4& rho,
                                const DensityMatrix4& rho_tilde);

double von_neumann_entropy(const Eigen::MatrixXcd& rho);  // bits
double purity(const Eigen::MatrixXcd& rho);               // tr rho^2

DensityMatrix2 trace_out_second(const DensityMatrix4& rho);
DensityMatrix2 trace_out_first(const DensityMatrix4& rho);

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

}  // namespace helent
