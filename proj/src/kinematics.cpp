#include "helent/kinematics.hpp"

#include <cmath>
#include <numbers>

namespace helent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const Eigen::Vector4d kMetricDiag(1.0, -1.0, -1.0, -1.0);

Eigen::Matrix4d minkowski_metric() {
  return kMetricDiag.asDiagonal();
}

}  // namespace

FourMomentum::FourMomentum(double mass, double tau, double theta, double phi)
    : mass_(mass), tau_(tau), theta_(theta), phi_(phi) {
  if (!(std::isfinite(mass) && mass > 0.0)) {
    throw std::invalid_argument("FourMomentum: mass must be positive and finite");
  }
  if (!(std::isfinite(tau) && tau >= 0.0)) {
    throw std::invalid_argument("FourMomentum: rapidity must be finite and >= 0");
  }
  if (tau > kMaxRapidity) {
    throw std::invalid_argument("FourMomentum: rapidity exceeds the cap of 40");
  }
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("FourMomentum: polar angle must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw std::invalid_argument("FourMomentum: azimuth must lie in [0, 2pi)");
  }
}

FourMomentum FourMomentum::rest(double mass) {
  return FourMomentum(mass, 0.0, 0.0, 0.0);
}

double FourMomentum::energy() const { return mass_ * std::cosh(tau_); }

double FourMomentum::momentum_mag() const { return mass_ * std::sinh(tau_); }

Eigen::Vector3d FourMomentum::momentum() const {
  const double p = momentum_mag();
  const double st = std::sin(theta_);
  return {p * st * std::cos(phi_), p * st * std::sin(phi_),
          p * std::cos(theta_)};
}

Eigen::Vector4d FourMomentum::vec4() const {
  Eigen::Vector4d v;
  v(0) = energy();
  v.tail<3>() = momentum();
  return v;
}

LorentzTransform::LorentzTransform(Eigen::Matrix4d m, TransformKind kind)
    : m_(std::move(m)), kind_(kind) {}

LorentzTransform LorentzTransform::identity() {
  return {Eigen::Matrix4d::Identity(), TransformKind::rotation};
}

LorentzTransform LorentzTransform::boost_z(double eta) {
  if (!std::isfinite(eta)) {
    throw std::invalid_argument("boost_z: rapidity must be finite");
  }
  if (std::abs(eta) > kMaxRapidity) {
    throw std::invalid_argument("boost_z: rapidity exceeds the cap of 40");
  }
  const double ch = std::cosh(eta);
  const double sh = std::sinh(eta);
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 0) = ch;
  m(0, 3) = sh;
  m(3, 0) = sh;
  m(3, 3) = ch;
  return {m, TransformKind::boost};
}

LorentzTransform LorentzTransform::rotation_axis_angle(
    const Eigen::Vector3d& axis, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation_axis_angle: angle must be finite");
  }
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("rotation_axis_angle: axis must be unit length");
  }
  const Eigen::Vector3d n = axis.normalized();
  Eigen::Matrix3d k;
  k << 0.0, -n.z(), n.y(),
       n.z(), 0.0, -n.x(),
      -n.y(), n.x(), 0.0;
  const Eigen::Matrix3d r = Eigen::Matrix3d::Identity() +
                            std::sin(angle) * k +
                            (1.0 - std::cos(angle)) * (k * k);
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.bottomRightCorner<3, 3>() = r;
  return {m, TransformKind::rotation};
}

LorentzTransform LorentzTransform::rotation_to_direction(double theta,
                                                         double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument(
        "rotation_to_direction: polar angle must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < kTwoPi)) {
    throw std::invalid_argument(
        "rotation_to_direction: azimuth must lie in [0, 2pi)");
  }
  return rotation_axis_angle(Eigen::Vector3d::UnitZ(), phi) *
         rotation_axis_angle(Eigen::Vector3d::UnitY(), theta);
}

LorentzTransform LorentzTransform::pure_boost(const FourMomentum& p) {
  const LorentzTransform r = rotation_to_direction(p.theta(), p.phi());
  const LorentzTransform b = boost_z(p.tau());
  Eigen::Matrix4d m = r.matrix() * b.matrix() * r.matrix().transpose();
  return {m, TransformKind::boost};
}

LorentzTransform LorentzTransform::from_matrix(const Eigen::Matrix4d& m) {
  LorentzTransform out{m, TransformKind::general};
  if (!m.allFinite() || metric_residual(out) > 1e-9) {
    throw std::invalid_argument("from_matrix: not a Lorentz matrix");
  }
  return out;
}

LorentzTransform LorentzTransform::inverse() const {
  const Eigen::Matrix4d eta = minkowski_metric();
  return {eta * m_.transpose() * eta, kind_};
}

LorentzTransform operator*(const LorentzTransform& a,
                           const LorentzTransform& b) {
  const TransformKind kind = (a.kind() == TransformKind::rotation &&
                              b.kind() == TransformKind::rotation)
                                 ? TransformKind::rotation
                                 : TransformKind::general;
  return {a.matrix() * b.matrix(), kind};
}

FourMomentum apply(const LorentzTransform& lambda, const FourMomentum& p) {
  const Eigen::Vector4d y = lambda.matrix() * p.vec4();
  const double m = p.mass();
  const double p_trans = std::hypot(y(1), y(2));
  const double p_mag = std::hypot(p_trans, y(3));

  // Cancellation-safe off-shell check: compare the energy against the value
  // the spatial part demands instead of forming p0^2 - |p|^2.
  const double expected = std::hypot(m, p_mag);
  if (std::abs(y(0) - expected) > 1e-9 * std::max(expected, y(0))) {
    throw InternalConsistencyError(
        "apply: transformed momentum drifted off shell");
  }

  if (p_mag <= 1e-12 * m) {
    return FourMomentum::rest(m);
  }

  const double tau = std::asinh(p_mag / m);
  const double theta = std::atan2(p_trans, y(3));
  double phi = std::atan2(y(2), y(1));
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return {m, tau, theta, phi};
}

std::pair<LorentzTransform, LorentzTransform> decompose_boost_rotation(
    const LorentzTransform& lambda) {
  const Eigen::Matrix4d& m = lambda.matrix();
  if (m(0, 0) < 1.0 - 1e-9 || m.determinant() < 0.0 ||
      metric_residual(lambda) > 1e-9) {
    throw std::invalid_argument(
        "decompose_boost_rotation: input is not proper orthochronous");
  }

  // Lambda e0 is the four-velocity the boost part must produce from rest;
  // the boost is then fixed and the rotation is what is left over.
  const Eigen::Vector4d u = m.col(0);
  const double u_mag = u.tail<3>().norm();
  LorentzTransform boost = LorentzTransform::identity();
  if (u_mag > 1e-14) {
    const double tau = std::asinh(u_mag);
    const double theta = std::atan2(std::hypot(u(1), u(2)), u(3));
    double phi = std::atan2(u(2), u(1));
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
    boost = LorentzTransform::pure_boost(FourMomentum(1.0, tau, theta, phi));
  } else {
    boost = LorentzTransform{Eigen::Matrix4d::Identity(), TransformKind::boost};
  }
  LorentzTransform rotation{boost.inverse().matrix() * m,
                            TransformKind::rotation};
  return {boost, rotation};
}

double metric_residual(const LorentzTransform& lambda) {
  const Eigen::Matrix4d eta = minkowski_metric();
  const Eigen::Matrix4d r =
      lambda.matrix().transpose() * eta * lambda.matrix() - eta;
  return r.cwiseAbs().maxCoeff();
}

double on_shell_residual(const FourMomentum& p) {
  const double expected = std::hypot(p.mass(), p.momentum_mag());
  return std::abs(p.energy() - expected) / p.energy();
}

}  // namespace helent
