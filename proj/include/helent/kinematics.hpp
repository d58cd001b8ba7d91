#pragma once

#include <Eigen/Dense>
#include <utility>

#include "helent/errors.hpp"

namespace helent {

// Rapidities beyond this make cosh/sinh eat the entire double mantissa.
inline constexpr double kMaxRapidity = 40.0;

/// On-shell four-momentum of a massive particle, stored as
/// (mass, rapidity, polar angle, azimuth). Cartesian components are derived
/// from these, so the momentum is on-shell by construction at every rapidity.
/// Natural units, c = hbar = 1; masses and momenta are usually expressed in
/// units of the particle mass (mass = 1).
class FourMomentum {
 public:
  FourMomentum(double mass, double tau, double theta, double phi);

  static FourMomentum rest(double mass);

  double mass() const { return mass_; }
  double tau() const { return tau_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// True when the spatial momentum vanishes; the momentum direction (and
  /// with it the helicity frame) is then a pure convention.
  bool direction_degenerate() const { return tau_ == 0.0; }

  double energy() const;                 // m cosh(tau)
  double momentum_mag() const;           // m sinh(tau)
  Eigen::Vector3d momentum() const;
  Eigen::Vector4d vec4() const;          // (p0, px, py, pz)

 private:
  double mass_;
  double tau_;
  double theta_;
  double phi_;
};

enum class TransformKind { rotation, boost, general };

/// Proper orthochronous Lorentz transformation in the 4-vector
/// representation, metric diag(1,-1,-1,-1).
class LorentzTransform {
 public:
  static LorentzTransform identity();
  static LorentzTransform boost_z(double eta);
  static LorentzTransform rotation_axis_angle(const Eigen::Vector3d& axis,
                                              double angle);
  /// R(p) = R_z(phi) R_y(theta): carries the z axis into the direction
  /// (theta, phi).
  static LorentzTransform rotation_to_direction(double theta, double phi);
  /// L(p) = R(p) B_z(tau) R(p)^-1: pure boost from rest to p.
  static LorentzTransform pure_boost(const FourMomentum& p);

  /// Wraps an externally supplied matrix; it must preserve the metric but
  /// may lie outside the proper orthochronous component. Tagged general.
  static LorentzTransform from_matrix(const Eigen::Matrix4d& m);

  const Eigen::Matrix4d& matrix() const { return m_; }
  TransformKind kind() const { return kind_; }

  LorentzTransform inverse() const;  // eta Lambda^T eta

  friend LorentzTransform operator*(const LorentzTransform& a,
                                    const LorentzTransform& b);

 private:
  LorentzTransform(Eigen::Matrix4d m, TransformKind kind);
  friend std::pair<LorentzTransform, LorentzTransform>
  decompose_boost_rotation(const LorentzTransform& lambda);

  Eigen::Matrix4d m_;
  TransformKind kind_;
};

/// Transforms p and reconstructs (tau', theta', phi') from the Cartesian
/// components. A vanishing spatial part maps to the rest momentum with the
/// (theta, phi) = (0, 0) convention and the degenerate flag set.
FourMomentum apply(const LorentzTransform& lambda, const FourMomentum& p);

/// Polar split Lambda = B * R with B a pure boost and R a pure rotation.
std::pair<LorentzTransform, LorentzTransform> decompose_boost_rotation(
    const LorentzTransform& lambda);

// Residual diagnostics, used by tests and the validation report.
double metric_residual(const LorentzTransform& lambda);  // ||L^T eta L - eta||_inf
double on_shell_residual(const FourMomentum& p);         // |p0 - hypot(m, |p|)| / p0

}  // namespace helent
