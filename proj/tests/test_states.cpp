#include <doctest.h>

#include <cmath>
#include <memory>

#include "helent/entanglement.hpp"
#include "helent/states.hpp"
#include "oracles.hpp"

using helent::Helicity;
using helent::MomentumGrid;
using helent::SingleParticleAmplitude;
using helent::Symmetrization;
using helent::TwoParticleState;
using helent::WavePacket;

namespace {

std::shared_ptr<const MomentumGrid> grid_ptr(int nr, int nt, int np,
                                             double cutoff) {
  return std::make_shared<const MomentumGrid>(
      helent::build_grid(nr, nt, np, cutoff));
}

double gaussian_norm(const MomentumGrid& grid, const WavePacket& f) {
  long double acc = 0.0L;
  for (const auto& n : grid.nodes()) {
    acc += static_cast<long double>(n.weight) * f(n.p_mag) * f(n.p_mag);
  }
  return static_cast<double>(acc);
}

double gaussian_second_moment(const MomentumGrid& grid, const WavePacket& f) {
  long double acc = 0.0L;
  for (const auto& n : grid.nodes()) {
    acc += static_cast<long double>(n.weight) * f(n.p_mag) * f(n.p_mag) *
           n.p_mag * n.p_mag;
  }
  return static_cast<double>(acc);
}

}  // namespace

TEST_CASE("build_grid validates and produces positive interior nodes") {
  CHECK_THROWS_AS(helent::build_grid(1, 8, 8, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(helent::build_grid(8, 8, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(helent::build_grid(8, 8, 8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(helent::build_grid(8, 8, 8, -1.0), std::invalid_argument);

  const MomentumGrid grid = helent::build_grid(12, 10, 6, 5.0);
  CHECK(grid.size() == 12u * 10u * 6u);
  double min_r = 1e300;
  for (const auto& n : grid.nodes()) {
    CHECK(n.weight > 0.0);
    min_r = std::min(min_r, n.p_mag);
    CHECK(n.theta > 0.0);
    CHECK(n.theta < oracles::kPi);
  }
  CHECK(min_r > 0.0);

  // deterministic for fixed inputs
  const MomentumGrid again = helent::build_grid(12, 10, 6, 5.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid.nodes()[i].p_mag == again.nodes()[i].p_mag);
    CHECK(grid.nodes()[i].weight == again.nodes()[i].weight);
  }
}

TEST_CASE("gaussian wavepacket point values") {
  CHECK_THROWS_AS(WavePacket(0.0), std::invalid_argument);
  CHECK_THROWS_AS(WavePacket(-1.0), std::invalid_argument);

  const WavePacket f(1.0);
  CHECK(f(0.0) ==
        doctest::Approx(std::pow(oracles::kPi, -0.75)).epsilon(1e-15));
  CHECK(f(1.0) / f(0.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));

  const WavePacket g(0.3);
  CHECK(g(0.0) == doctest::Approx(std::pow(oracles::kPi, -0.75) *
                                  std::pow(0.3, -1.5))
                      .epsilon(1e-15));
  // isotropic by construction: value depends on |p| only
  CHECK(g(0.7) == g(0.7));
}

TEST_CASE("grid quadrature reproduces the Gaussian moments") {
  for (double eps : {0.1, 1.0, 10.0}) {
    const auto grid = helent::build_grid(32, 32, 8, 8.0 * eps);
    const WavePacket f(eps);
    CHECK(std::abs(gaussian_norm(grid, f) - 1.0) <= 1e-8);
    const double second = gaussian_second_moment(grid, f);
    CHECK(std::abs(second - 1.5 * eps * eps) <= 1e-6 * 1.5 * eps * eps);
  }
}

TEST_CASE("radial refinement has hit the plateau at 32 nodes") {
  const WavePacket f(1.0);
  const double base = gaussian_norm(helent::build_grid(32, 32, 8, 8.0), f);
  const double fine = gaussian_norm(helent::build_grid(64, 32, 8, 8.0), f);
  CHECK(std::abs(base - fine) < 1e-10);
}

TEST_CASE("packet amplitudes populate the requested helicity slot") {
  const auto grid = grid_ptr(32, 32, 8, 8.0);
  const auto plus = packet_amplitude(grid, WavePacket(1.0), Helicity::plus);
  const auto minus = packet_amplitude(grid, WavePacket(1.0), Helicity::minus);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    CHECK(plus.values[i](1) == 0.0);
    CHECK(minus.values[i](0) == 0.0);
    CHECK(plus.values[i](0).real() > 0.0);
  }
  CHECK(plus.norm() == doctest::Approx(1.0).epsilon(1e-8));
  const auto unit = normalized(plus);
  CHECK(unit.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("product state basics") {
  const auto grid = grid_ptr(16, 16, 4, 8.0);
  const WavePacket f(1.0);
  const TwoParticleState state =
      product_state(f, f, Helicity::plus, Helicity::plus, grid);
  CHECK(state.rank() == 1);
  CHECK(helent::state_norm(state) == doctest::Approx(1.0).epsilon(1e-12));

  const helent::DensityMatrix4 rho =
      helent::reduced_two(state, 0.0, helent::Mode::helicity);
  helent::DensityMatrix4 expect = helent::DensityMatrix4::Zero();
  expect(0, 0) = 1.0;
  CHECK((rho - expect).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("correlated state with equal packets is a Bell state at rest") {
  const auto grid = grid_ptr(16, 16, 4, 8.0);
  const WavePacket f(1.0);
  const TwoParticleState state = correlated_state(f, f, grid);
  CHECK(state.rank() == 2);

  const helent::DensityMatrix4 rho =
      helent::reduced_two(state, 0.0, helent::Mode::helicity);
  helent::DensityMatrix4 bell = helent::DensityMatrix4::Zero();
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK((rho - bell).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(helent::wootters_concurrence(rho) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("orthogonal momentum factors kill the Bell coherence") {
  const auto grid = grid_ptr(24, 16, 4, 8.0);
  auto f1p = normalized(packet_amplitude(grid, WavePacket(1.0), Helicity::plus));
  auto f1m = normalized(packet_amplitude(grid, WavePacket(1.0), Helicity::minus));
  auto g2p = packet_amplitude(grid, WavePacket(0.5), Helicity::plus);
  auto g2m = packet_amplitude(grid, WavePacket(0.5), Helicity::minus);
  // Gram-Schmidt against f1 on the grid, separately per helicity slot
  const std::complex<double> s_p = inner(f1p, g2p);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    g2p.values[i] -= s_p * f1p.values[i];
    g2m.values[i] -= s_p * f1m.values[i];
  }
  g2p = normalized(g2p);
  g2m = normalized(g2m);
  CHECK(std::abs(inner(f1p, g2p)) <= 1e-12);

  const TwoParticleState state = TwoParticleState::low_rank(
      grid, {1.0, 1.0}, {f1p, g2m}, {g2p, f1m});
  const helent::DensityMatrix4 rho =
      helent::reduced_two(state, 0.0, helent::Mode::helicity);
  // equal diagonal mixture, no coherence
  CHECK(std::abs(rho(0, 0).real() - 0.5) <= 1e-10);
  CHECK(std::abs(rho(3, 3).real() - 0.5) <= 1e-10);
  CHECK(std::abs(rho(0, 3)) <= 1e-10);
  CHECK(helent::wootters_concurrence(rho) <= 1e-10);
}

TEST_CASE("partial packet overlap scales the rest-frame concurrence as s^2") {
  const auto grid = grid_ptr(32, 16, 4, 8.0);
  const WavePacket f1(1.0);
  const WavePacket f2(0.5);

  const auto a = normalized(packet_amplitude(grid, f1, Helicity::plus));
  const auto b = normalized(packet_amplitude(grid, f2, Helicity::plus));
  const double s_grid = inner(a, b).real();
  const double s = oracles::gaussian_overlap(1.0, 0.5);
  CHECK(std::abs(s_grid - s) <= 1e-8);

  const TwoParticleState state = correlated_state(f1, f2, grid);
  const helent::DensityMatrix4 rho =
      helent::reduced_two(state, 0.0, helent::Mode::helicity);
  CHECK(std::abs(rho(0, 3).real() - 0.5 * s * s) <= 1e-8);
  // X-state concurrence: 2 |rho03|, and s^2 = 0.8^3 = 0.512 here
  CHECK(helent::wootters_concurrence(rho) ==
        doctest::Approx(0.512).epsilon(1e-7));
}

TEST_CASE("normalize is idempotent and projective") {
  const auto grid = grid_ptr(16, 16, 4, 8.0);
  const WavePacket f(1.0);
  const TwoParticleState state =
      product_state(f, WavePacket(0.7), Helicity::plus, Helicity::minus, grid);

  const TwoParticleState twice = normalize(state);
  CHECK(std::abs(twice.coeffs()[0] - state.coeffs()[0]) <= 1e-12);

  // scaling the coefficients is washed out by normalization
  auto a = state.a_factors();
  auto b = state.b_factors();
  const TwoParticleState scaled =
      TwoParticleState::low_rank(grid, {3.0}, a, b);
  CHECK(std::abs(scaled.coeffs()[0] - state.coeffs()[0]) <= 1e-12);

  // orthonormal rank-2 factors with c = (1, 1) normalize to 1/sqrt(2)
  const auto plus = normalized(packet_amplitude(grid, f, Helicity::plus));
  const auto minus = normalized(packet_amplitude(grid, f, Helicity::minus));
  const TwoParticleState rank2 = TwoParticleState::low_rank(
      grid, {1.0, 1.0}, {plus, minus}, {plus, minus});
  CHECK(std::abs(rank2.coeffs()[0] - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(rank2.coeffs()[1] - 1.0 / std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("exchange symmetrization") {
  const auto grid = grid_ptr(16, 16, 4, 8.0);
  const WavePacket f(1.0);

  // symmetrizing an already symmetric product state changes nothing
  const TwoParticleState plain =
      product_state(f, f, Helicity::plus, Helicity::plus, grid);
  const TwoParticleState sym = product_state(
      f, f, Helicity::plus, Helicity::plus, grid, Symmetrization::symmetric);
  const auto rho_plain = helent::reduced_two(plain, -0.8, helent::Mode::helicity);
  const auto rho_sym = helent::reduced_two(sym, -0.8, helent::Mode::helicity);
  CHECK((rho_plain - rho_sym).cwiseAbs().maxCoeff() <= 1e-12);

  // the antisymmetrized version cancels identically
  CHECK_THROWS_AS(product_state(f, f, Helicity::plus, Helicity::plus, grid,
                                Symmetrization::antisymmetric),
                  std::invalid_argument);

  // with distinct factors the antisymmetrized state survives
  const TwoParticleState anti =
      product_state(f, WavePacket(0.5), Helicity::plus, Helicity::minus, grid,
                    Symmetrization::antisymmetric);
  CHECK(helent::state_norm(anti) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(anti.rank() == 2);
}

TEST_CASE("densified states carry unit norm") {
  const auto grid = grid_ptr(8, 8, 4, 8.0);
  const TwoParticleState state =
      correlated_state(WavePacket(1.0), WavePacket(0.5), grid);
  const helent::DenseTwoParticleState dense = densify(state);

  long double acc = 0.0L;
  const auto& nodes = grid->nodes();
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc += static_cast<long double>(nodes[i].weight) * nodes[j].weight *
             dense.g[i * n + j].squaredNorm();
    }
  }
  CHECK(static_cast<double>(acc) == doctest::Approx(1.0).epsilon(1e-12));
}
