#include "helent/spinrep.hpp"

#include <cmath>
#include <numbers>

namespace helent {

namespace {

using namespace std::complex_literals;

// Closed-form rapidity and polar angle of boost_z(eta) applied to a momentum
// of rapidity tau and polar angle theta. The z component carries the only
// cancellation; both outputs go through atan2/asinh so the angles stay
// accurate down to the degenerate point itself.
BoostedAngles boosted_angles_scalar(double eta, double tau, double theta) {
  const double sh_t = std::sinh(tau);
  const double ch_t = std::cosh(tau);
  const double z = std::sinh(eta) * ch_t + std::cosh(eta) * sh_t * std::cos(theta);
  const double perp = sh_t * std::sin(theta);  // >= 0
  const double mag = std::hypot(perp, z);
  if (mag <= 1e-14) {
    throw DegenerateMomentumError(
        "boosted momentum is at rest; its direction is undefined");
  }
  return {std::asinh(mag), std::atan2(perp, z)};
}

SpinorMatrix d_pure_boost_inverse(const FourMomentum& p) {
  const SpinorMatrix r = d_rotation_to_direction(p.theta(), p.phi());
  return r * d_boost_z(-p.tau()) * r.adjoint();
}

void check_boost_rapidity(double eta) {
  if (!std::isfinite(eta)) {
    throw std::invalid_argument("boost rapidity must be finite");
  }
  if (std::abs(eta) > kMaxRapidity) {
    throw std::invalid_argument("boost rapidity exceeds the cap of 40");
  }
}

}  // namespace

SpinorMatrix d_rotation(const Eigen::Vector3d& axis, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("d_rotation: angle must be finite");
  }
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("d_rotation: axis must be unit length");
  }
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  SpinorMatrix m;
  m << c - 1.0i * axis.z() * s, (-1.0i * axis.x() - axis.y()) * s,
      (-1.0i * axis.x() + axis.y()) * s, c + 1.0i * axis.z() * s;
  return m;
}

SpinorMatrix d_boost_z(double rapidity) {
  check_boost_rapidity(rapidity);
  SpinorMatrix m = SpinorMatrix::Zero();
  m(0, 0) = std::exp(0.5 * rapidity);
  m(1, 1) = std::exp(-0.5 * rapidity);
  return m;
}

SpinorMatrix d_rotation_to_direction(double theta, double phi) {
  return d_rotation(Eigen::Vector3d::UnitZ(), phi) *
         d_rotation(Eigen::Vector3d::UnitY(), theta);
}

SpinorMatrix d_pure_boost(const FourMomentum& p) {
  const SpinorMatrix r = d_rotation_to_direction(p.theta(), p.phi());
  return r * d_boost_z(p.tau()) * r.adjoint();
}

SpinorMatrix wigner_rotation(double eta, const FourMomentum& p) {
  check_boost_rapidity(eta);
  if (eta == 0.0) return SpinorMatrix::Identity();
  return wigner_rotation(boost_z_action(eta), p);
}

SpinorMatrix helicity_rotation(double eta, const FourMomentum& p) {
  check_boost_rapidity(eta);
  if (eta == 0.0) return SpinorMatrix::Identity();
  return helicity_rotation(boost_z_action(eta), p);
}

BoostedAngles boosted_rapidity_polar(double eta, const FourMomentum& p) {
  check_boost_rapidity(eta);
  return boosted_angles_scalar(eta, p.tau(), p.theta());
}

SpinorMatrix helicity_rotation_closed_form(double eta, double tau,
                                           double theta) {
  check_boost_rapidity(eta);
  if (!(std::isfinite(tau) && tau >= 0.0 && tau <= kMaxRapidity)) {
    throw std::invalid_argument("helicity_rotation_closed_form: bad rapidity");
  }
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("helicity_rotation_closed_form: bad angle");
  }
  if (eta == 0.0) return SpinorMatrix::Identity();
  const BoostedAngles ba = boosted_angles_scalar(eta, tau, theta);
  const Eigen::Vector3d y = Eigen::Vector3d::UnitY();
  return d_boost_z(-ba.rapidity) * d_rotation(y, -ba.polar) * d_boost_z(eta) *
         d_rotation(y, theta) * d_boost_z(tau);
}

LorentzAction boost_z_action(double eta) {
  return {LorentzTransform::boost_z(eta), d_boost_z(eta)};
}

LorentzAction rotation_action(const Eigen::Vector3d& axis, double angle) {
  return {LorentzTransform::rotation_axis_angle(axis, angle),
          d_rotation(axis, angle)};
}

LorentzAction operator*(const LorentzAction& a, const LorentzAction& b) {
  return {a.vector * b.vector, a.spinor * b.spinor};
}

SpinorMatrix wigner_rotation(const LorentzAction& lambda,
                             const FourMomentum& p) {
  const FourMomentum q = apply(lambda.vector, p);
  // A boosted momentum at rest still has L(q) = I, so the Wigner rotation
  // itself needs no direction convention.
  const SpinorMatrix w =
      d_pure_boost_inverse(q) * lambda.spinor * d_pure_boost(p);
  return project_su2(w);
}

SpinorMatrix helicity_rotation(const LorentzAction& lambda,
                               const FourMomentum& p) {
  const FourMomentum q = apply(lambda.vector, p);
  if (q.direction_degenerate()) {
    throw DegenerateMomentumError(
        "helicity_rotation: boosted momentum is at rest");
  }
  const SpinorMatrix w =
      d_pure_boost_inverse(q) * lambda.spinor * d_pure_boost(p);
  const SpinorMatrix z = d_rotation_to_direction(q.theta(), q.phi()).adjoint() *
                         w * d_rotation_to_direction(p.theta(), p.phi());
  return project_su2(z);
}

SpinorMatrix project_su2(const SpinorMatrix& m) {
  const std::complex<double> a = 0.5 * (m(0, 0) + std::conj(m(1, 1)));
  const std::complex<double> b = 0.5 * (m(0, 1) - std::conj(m(1, 0)));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  if (!(n > 0.1)) {
    throw InternalConsistencyError(
        "project_su2: matrix is nowhere near the unitary group");
  }
  SpinorMatrix out;
  out << a / n, b / n, -std::conj(b) / n, std::conj(a) / n;
  return out;
}

double unitarity_residual(const SpinorMatrix& m) {
  const SpinorMatrix r = m.adjoint() * m - SpinorMatrix::Identity();
  return r.cwiseAbs().maxCoeff();
}

}  // namespace helent
