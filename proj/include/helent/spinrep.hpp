#pragma once

#include <Eigen/Dense>
#include <complex>

#include "helent/kinematics.hpp"

namespace helent {

/// 2x2 complex image of a Lorentz transformation in the spin-1/2
/// representation. Factories keep det = 1; little-group images (Wigner and
/// helicity rotations) are additionally unitary.
using SpinorMatrix = Eigen::Matrix2cd;

/// exp(-i angle (axis . sigma) / 2); axis must be unit length.
SpinorMatrix d_rotation(const Eigen::Vector3d& axis, double angle);

/// diag(e^{rapidity/2}, e^{-rapidity/2}); Hermitian, det 1.
SpinorMatrix d_boost_z(double rapidity);

/// Image of R(p) = R_z(phi) R_y(theta).
SpinorMatrix d_rotation_to_direction(double theta, double phi);

/// Image of the pure boost L(p) = R(p) B_z(tau) R(p)^-1.
SpinorMatrix d_pure_boost(const FourMomentum& p);

/// Image of the Wigner rotation W = L^-1(Lambda p) Lambda L(p) for a z-boost
/// of rapidity eta; unitary. This is how spin states mix under the boost.
SpinorMatrix wigner_rotation(double eta, const FourMomentum& p);

/// Image of Z = R^-1(Lambda p) W R(p) for a z-boost of rapidity eta;
/// unitary. This is how helicity states mix under the boost.
SpinorMatrix helicity_rotation(double eta, const FourMomentum& p);

/// Rapidity and polar angle of the boosted momentum, from the closed-form
/// trigonometric expressions (not from the 4x4 matrix action). Throws
/// DegenerateMomentumError when the boost sends p exactly to rest.
struct BoostedAngles {
  double rapidity;  // >= 0
  double polar;     // in [0, pi]
};
BoostedAngles boosted_rapidity_polar(double eta, const FourMomentum& p);

/// The literal five-factor closed form for the helicity rotation of a
/// z-boost at azimuth phi = 0:
///   B_z(-a) R_y(-b) B_z(eta) R_y(theta) B_z(tau)
/// with (a, b) the boosted rapidity and polar angle. Kept as an independent
/// oracle for helicity_rotation; returned raw (not re-unitarized).
SpinorMatrix helicity_rotation_closed_form(double eta, double tau,
                                           double theta);

/// One finite Lorentz transformation carried in both representations, so
/// that Wigner/helicity rotations of composite transforms (rotations,
/// boost-rotation words) can be formed consistently.
struct LorentzAction {
  LorentzTransform vector;
  SpinorMatrix spinor;
};

LorentzAction boost_z_action(double eta);
LorentzAction rotation_action(const Eigen::Vector3d& axis, double angle);
LorentzAction operator*(const LorentzAction& a, const LorentzAction& b);

SpinorMatrix wigner_rotation(const LorentzAction& lambda,
                             const FourMomentum& p);
SpinorMatrix helicity_rotation(const LorentzAction& lambda,
                               const FourMomentum& p);

/// Nearest matrix of the form [[a, b], [-conj(b), conj(a)]] with unit norm;
/// used to keep little-group images exactly unitary after composition.
SpinorMatrix project_su2(const SpinorMatrix& m);

double unitarity_residual(const SpinorMatrix& m);  // ||M^dag M - I||_inf

}  // namespace helent
