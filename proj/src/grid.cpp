#include "helent/grid.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace helent {

namespace {

struct GlTable {
  explicit GlTable(std::size_t n)
      : table(gsl_integration_glfixed_table_alloc(n)) {
    if (table == nullptr) {
      throw std::runtime_error("failed to allocate Gauss-Legendre table");
    }
  }
  ~GlTable() { gsl_integration_glfixed_table_free(table); }
  GlTable(const GlTable&) = delete;
  GlTable& operator=(const GlTable&) = delete;

  gsl_integration_glfixed_table* table;
};

}  // namespace

MomentumGrid::MomentumGrid(int n_radial, int n_polar, int n_azimuthal,
                           double cutoff, std::vector<GridNode> nodes)
    : n_radial_(n_radial),
      n_polar_(n_polar),
      n_azimuthal_(n_azimuthal),
      cutoff_(cutoff),
      nodes_(std::move(nodes)) {}

MomentumGrid build_grid(int n_radial, int n_polar, int n_azimuthal,
                        double radial_cutoff) {
  if (n_radial < 2 || n_polar < 2 || n_azimuthal < 2) {
    throw std::invalid_argument("build_grid: all node counts must be >= 2");
  }
  if (!(std::isfinite(radial_cutoff) && radial_cutoff > 0.0)) {
    throw std::invalid_argument("build_grid: cutoff must be positive");
  }

  const GlTable radial(static_cast<std::size_t>(n_radial));
  const GlTable polar(static_cast<std::size_t>(n_polar));

  std::vector<GridNode> nodes;
  nodes.reserve(static_cast<std::size_t>(n_radial) * n_polar * n_azimuthal);

  // The polar rule is Gauss-Legendre in theta with measure sin(theta),
  // not in cos(theta): helicity-frame integrands carry half-angle factors
  // sqrt((1 -+ cos theta)/2) that are analytic in theta but branch at the
  // poles in the cos(theta) variable, which would cap convergence at N^-3.
  const double w_phi = 2.0 * std::numbers::pi / n_azimuthal;
  for (int i = 0; i < n_radial; ++i) {
    double r = 0.0, w_r = 0.0;
    gsl_integration_glfixed_point(0.0, radial_cutoff, i, &r, &w_r,
                                  radial.table);
    const double tau = std::asinh(r);
    for (int j = 0; j < n_polar; ++j) {
      double theta = 0.0, w_theta = 0.0;
      gsl_integration_glfixed_point(0.0, std::numbers::pi, j, &theta, &w_theta,
                                    polar.table);
      const double w_polar = std::sin(theta) * w_theta;
      for (int k = 0; k < n_azimuthal; ++k) {
        const double phi = w_phi * k;
        nodes.push_back({r, tau, theta, phi, r * r * w_r * w_polar * w_phi});
      }
    }
  }
  return {n_radial, n_polar, n_azimuthal, radial_cutoff, std::move(nodes)};
}

}  // namespace helent
