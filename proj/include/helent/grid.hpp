#pragma once

#include <vector>

#include "helent/errors.hpp"

namespace helent {

/// One quadrature node of the momentum-space measure d^3p. The radial
/// coordinate is |p| in units of the particle mass; weight carries the full
/// |p|^2 w_r w_theta w_phi factor.
struct GridNode {
  double p_mag;
  double tau;    // asinh(p_mag), rapidity of the on-shell momentum (m = 1)
  double theta;  // polar angle, in (0, pi)
  double phi;    // azimuth, in [0, 2pi)
  double weight;
};

/// Spherical product quadrature: Gauss-Legendre in |p| on (0, cutoff],
/// Gauss-Legendre in theta on (0, pi) with the sin(theta) measure folded
/// into the weights, uniform in phi on [0, 2pi). Nodes are strictly
/// interior, so |p| = 0 and the poles never appear.
class MomentumGrid {
 public:
  MomentumGrid(int n_radial, int n_polar, int n_azimuthal, double cutoff,
               std::vector<GridNode> nodes);

  int n_radial() const { return n_radial_; }
  int n_polar() const { return n_polar_; }
  int n_azimuthal() const { return n_azimuthal_; }
  double cutoff() const { return cutoff_; }

  const std::vector<GridNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  int n_radial_;
  int n_polar_;
  int n_azimuthal_;
  double cutoff_;
  std::vector<GridNode> nodes_;
};

MomentumGrid build_grid(int n_radial, int n_polar, int n_azimuthal,
                        double radial_cutoff);

}  // namespace helent
