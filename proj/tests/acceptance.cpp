// Acceptance suite: one test case per criterion, each printing a single
// pass/fail line with the observed residual and the pinned tolerance.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>

#include "helent/entanglement.hpp"
#include "helent/inspect.hpp"
#include "helent/spinrep.hpp"
#include "helent/sweep.hpp"
#include "oracles.hpp"

using helent::DensityMatrix2;
using helent::DensityMatrix4;
using helent::FourMomentum;
using helent::Helicity;
using helent::LorentzTransform;
using helent::Mode;
using helent::MomentumGrid;
using helent::SpinorMatrix;
using helent::TwoParticleState;
using helent::WavePacket;
using oracles::kPi;

namespace {

void report(int criterion, const char* label, bool pass, double observed,
            double tolerance) {
  std::printf("[acceptance] %2d %-34s %s  observed=%.3e tol=%.1e\n", criterion,
              label, pass ? "PASS" : "FAIL", observed, tolerance);
  std::fflush(stdout);
}

std::shared_ptr<const MomentumGrid> grid_ptr(int nr, int nt, int np,
                                             double cutoff) {
  return std::make_shared<const MomentumGrid>(
      helent::build_grid(nr, nt, np, cutoff));
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

helent::ScenarioConfig default_product_config(double eps) {
  helent::ScenarioConfig cfg;
  cfg.state = helent::StateKind::product;
  cfg.mode = Mode::helicity;
  cfg.epsilon_a = cfg.epsilon_b = eps;
  cfg.v_max = 0.98;
  cfg.v_count = 50;
  cfg.speeds.resize(cfg.v_count);
  for (int i = 0; i < cfg.v_count; ++i) {
    cfg.speeds[i] = cfg.v_max * i / (cfg.v_count - 1);
  }
  cfg.n_radial = 32;
  cfg.n_polar = 32;
  cfg.n_azimuthal = 8;
  cfg.refine = 2.0;
  return cfg;
}

}  // namespace

TEST_CASE("criterion 1: representation correctness") {
  const double t0 = now_seconds();
  oracles::Sampler s(101);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double eta = s.eta();
    const FourMomentum p = s.momentum();
    const SpinorMatrix z = helent::helicity_rotation(eta, p);
    const SpinorMatrix w = helent::wigner_rotation(eta, p);
    worst = std::max({worst, helent::unitarity_residual(z),
                      helent::unitarity_residual(w),
                      std::abs(z.determinant() - 1.0),
                      std::abs(w.determinant() - 1.0)});
  }
  const double elapsed = now_seconds() - t0;
  const bool pass = worst <= 1e-12 && elapsed < 5.0;
  report(1, "representation correctness", pass, worst, 1e-12);
  CHECK(worst <= 1e-12);
  CHECK(elapsed < 5.0);
}

TEST_CASE("criterion 2: closed-form angle oracle") {
  oracles::Sampler s(101);  // the same sample stream as criterion 1
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double eta = s.eta();
    const FourMomentum p = s.momentum();
    const helent::BoostedAngles a = helent::boosted_rapidity_polar(eta, p);
    const LorentzTransform boost = LorentzTransform::boost_z(eta);
    const double energy = (boost.matrix() * p.vec4())(0);
    const FourMomentum q = helent::apply(boost, p);
    worst = std::max({worst, std::abs(a.rapidity - std::acosh(energy)),
                      std::abs(a.polar - q.theta())});
  }
  report(2, "closed-form angle oracle", worst <= 1e-10, worst, 1e-10);
  CHECK(worst <= 1e-10);
}

TEST_CASE("criterion 3: five-factor product equivalence") {
  double worst = 0.0;
  for (int a = 0; a < 20; ++a) {
    const double eta = -3.0 * a / 19.0;
    for (int b = 0; b < 20; ++b) {
      const double tau = 3.0 * b / 19.0;
      for (int c = 0; c < 20; ++c) {
        const double theta = kPi * (c + 1) / 21.0;
        const SpinorMatrix closed =
            helent::helicity_rotation_closed_form(eta, tau, theta);
        const SpinorMatrix direct =
            helent::helicity_rotation(eta, FourMomentum(1.0, tau, theta, 0.0));
        worst = std::max(worst, oracles::su2_distance(closed, direct));
      }
    }
  }
  report(3, "five-factor product equivalence", worst <= 1e-10, worst, 1e-10);
  CHECK(worst <= 1e-10);
}

TEST_CASE("criterion 4: collinear helicity behavior") {
  SpinorMatrix flip;
  flip << 0.0, 1.0, -1.0, 0.0;
  double worst = 0.0;
  for (double tau : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    for (double scale : {0.25, 0.5, 0.9}) {
      const FourMomentum p(1.0, tau, 0.0, 0.0);
      const SpinorMatrix keep = helent::helicity_rotation(-scale * tau, p);
      worst = std::max(
          worst, (keep - SpinorMatrix::Identity()).cwiseAbs().maxCoeff());
      const SpinorMatrix flipped =
          helent::helicity_rotation(-(1.0 + scale) * tau, p);
      worst = std::max(worst, (flipped - flip).cwiseAbs().maxCoeff());
    }
  }
  report(4, "collinear identity and flip", worst <= 1e-12, worst, 1e-12);
  CHECK(worst <= 1e-12);
}

TEST_CASE("criterion 5: rotation invariance") {
  oracles::Sampler s(105);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double psi = 2.0 * kPi * s.uni(s.rng);
    const helent::LorentzAction rot =
        helent::rotation_action(Eigen::Vector3d::UnitZ(), psi);
    const SpinorMatrix z = helent::helicity_rotation(rot, s.momentum());
    // identity up to the SU(2) double-cover sign (the azimuth wraps mod 2pi)
    worst = std::max(worst,
                     oracles::su2_distance(z, SpinorMatrix::Identity()));
  }
  report(5, "z-rotation invariance", worst <= 1e-12, worst, 1e-12);
  CHECK(worst <= 1e-12);
}

TEST_CASE("criterion 6: quadrature moments") {
  const double t0 = now_seconds();
  double worst_norm = 0.0, worst_moment = 0.0;
  for (double eps : {0.1, 1.0, 10.0}) {
    const auto grid = grid_ptr(32, 32, 8, 8.0 * eps);
    const WavePacket f(eps);
    long double norm = 0.0L, second = 0.0L;
    for (const auto& n : grid->nodes()) {
      const double f2 = f(n.p_mag) * f(n.p_mag);
      norm += static_cast<long double>(n.weight) * f2;
      second += static_cast<long double>(n.weight) * f2 * n.p_mag * n.p_mag;
    }
    worst_norm =
        std::max(worst_norm, std::abs(static_cast<double>(norm) - 1.0));
    const double expect = 1.5 * eps * eps;
    worst_moment = std::max(
        worst_moment, std::abs(static_cast<double>(second) - expect) / expect);
  }
  const double elapsed = now_seconds() - t0;
  const bool pass = worst_norm <= 1e-8 && worst_moment <= 1e-6 && elapsed < 1.0;
  report(6, "gaussian quadrature moments", pass,
         std::max(worst_norm, worst_moment), 1e-6);
  CHECK(worst_norm <= 1e-8);
  CHECK(worst_moment <= 1e-6);
  CHECK(elapsed < 1.0);
}

TEST_CASE("criterion 7: concurrence unit suite") {
  DensityMatrix4 bell = DensityMatrix4::Zero();
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;

  DensityMatrix2 a = DensityMatrix2::Zero();
  a(0, 0) = 0.7;
  a(1, 1) = 0.3;
  DensityMatrix2 b;
  b << 0.6, 0.2, 0.2, 0.4;

  Eigen::Vector4cd psi_minus = Eigen::Vector4cd::Zero();
  psi_minus(1) = 1.0 / std::sqrt(2.0);
  psi_minus(2) = -1.0 / std::sqrt(2.0);
  const DensityMatrix4 w_third =
      (1.0 / 3.0) * (psi_minus * psi_minus.adjoint()) +
      (2.0 / 3.0) * 0.25 * DensityMatrix4::Identity();
  const DensityMatrix4 w_half = 0.5 * (psi_minus * psi_minus.adjoint()) +
                                0.5 * 0.25 * DensityMatrix4::Identity();

  const double worst = std::max(
      {std::abs(helent::wootters_concurrence(bell) - 1.0),
       std::abs(helent::wootters_concurrence(helent::kron2(a, b))),
       std::abs(helent::wootters_concurrence(w_third)),
       std::abs(helent::wootters_concurrence(w_half) - 0.25)});
  report(7, "concurrence unit suite", worst <= 1e-10, worst, 1e-10);
  CHECK(worst <= 1e-10);
}

TEST_CASE("criterion 8: product-state separability") {
  double worst_matrix = 0.0, worst_conc = 0.0;
  for (double eps : {0.01, 1.0, 10.0}) {
    const auto grid = grid_ptr(32, 32, 8, 8.0 * eps);
    const WavePacket f(eps);
    const TwoParticleState state =
        product_state(f, f, Helicity::plus, Helicity::plus, grid);
    const auto amp =
        normalized(packet_amplitude(grid, f, Helicity::plus));
    for (double v : {0.0, 0.3, 0.6, 0.9}) {
      const double eta = v == 0.0 ? 0.0 : -std::atanh(v);
      const DensityMatrix4 rho = helent::reduced_two(state, eta, Mode::helicity);
      const DensityMatrix2 sigma = helent::reduced_single(amp, eta, Mode::helicity);
      worst_matrix = std::max(
          worst_matrix, (rho - helent::kron2(sigma, sigma)).cwiseAbs().maxCoeff());
      worst_conc = std::max(worst_conc, helent::wootters_concurrence(rho));
    }
  }

  // the sweep report must surface that a factorized state stays separable
  helent::ScenarioConfig cfg = default_product_config(1.0);
  cfg.speeds = {0.0, 0.5};
  cfg.n_radial = cfg.n_polar = 8;
  cfg.n_azimuthal = 4;
  cfg.refine = 1.0;
  const bool annotated = helent::run_sweep(cfg).report.find(
                             helent::kProductStateNote) != std::string::npos;

  const double worst = std::max(worst_matrix, worst_conc);
  const bool pass = worst <= 1e-8 && annotated;
  report(8, "product-state separability", pass, worst, 1e-8);
  CHECK(worst_matrix <= 1e-8);
  CHECK(worst_conc <= 1e-8);
  CHECK(annotated);
}

TEST_CASE("criterion 9: spin concurrence frozen for sharp packets") {
  const double eps = 0.01;
  const auto grid = grid_ptr(32, 32, 8, 8.0 * eps);
  const TwoParticleState state =
      correlated_state(WavePacket(eps), WavePacket(eps), grid);
  const double c0 =
      helent::wootters_concurrence(helent::reduced_two(state, 0.0, Mode::spin));
  double worst = 0.0;
  for (double v : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}) {
    const double c = helent::wootters_concurrence(
        helent::reduced_two(state, -std::atanh(v), Mode::spin));
    worst = std::max(worst, std::abs(c - c0));
  }
  report(9, "spin-mode invariance (sharp)", worst <= 1e-3, worst, 1e-3);
  CHECK(worst <= 1e-3);
}

TEST_CASE("criterion 10: helicity concurrence is not invariant") {
  const double eps = 0.01;
  helent::ScenarioConfig cfg;
  cfg.state = helent::StateKind::correlated;
  cfg.mode = Mode::helicity;
  cfg.epsilon_1 = cfg.epsilon_2 = eps;
  cfg.speeds = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
  cfg.n_radial = 32;
  cfg.n_polar = 32;
  cfg.n_azimuthal = 8;
  cfg.refine = 2.0;
  const helent::SweepResult result = helent::run_sweep(cfg);

  const double c0 = result.rows.front().concurrence;
  double max_change = 0.0, max_plateau = 0.0;
  for (const auto& row : result.rows) {
    max_change = std::max(max_change, std::abs(row.concurrence - c0));
    max_plateau = std::max(max_plateau, row.plateau_delta);
  }
  const bool pass = max_change > 10.0 * max_plateau;
  report(10, "helicity-mode non-invariance", pass, max_change,
         10.0 * max_plateau);
  CHECK(max_change > 10.0 * max_plateau);
}

TEST_CASE("criterion 11: dense oracle equivalence") {
  const double t0 = now_seconds();
  const auto grid = grid_ptr(8, 8, 4, 8.0);
  const TwoParticleState rank1 = product_state(
      WavePacket(1.0), WavePacket(0.5), Helicity::plus, Helicity::minus, grid);
  const TwoParticleState rank2 =
      correlated_state(WavePacket(1.0), WavePacket(0.5), grid);
  double worst = 0.0;
  for (const TwoParticleState* state : {&rank1, &rank2}) {
    const helent::DenseTwoParticleState dense = densify(*state);
    for (double v : {0.2, 0.5, 0.8}) {
      const double eta = -std::atanh(v);
      const DensityMatrix4 fast =
          helent::reduced_two(*state, eta, Mode::helicity);
      const DensityMatrix4 slow =
          helent::reduced_two_dense(dense, eta, Mode::helicity);
      worst = std::max(worst, (fast - slow).cwiseAbs().maxCoeff());
    }
  }
  const double elapsed = now_seconds() - t0;
  const bool pass = worst <= 1e-10 && elapsed < 30.0;
  report(11, "dense vs low-rank equivalence", pass, worst, 1e-10);
  CHECK(worst <= 1e-10);
  CHECK(elapsed < 30.0);
}

TEST_CASE("criterion 12: default sweep performance and determinism") {
  const double t0 = now_seconds();
  std::vector<std::string> first_run;
  for (double eps : {0.01, 1.0, 10.0}) {
    const helent::ScenarioConfig cfg = default_product_config(eps);
    first_run.push_back(helent::to_csv(helent::run_sweep(cfg, {true, 0})));
  }
  const double elapsed = now_seconds() - t0;

  bool deterministic = true;
  int i = 0;
  for (double eps : {0.01, 1.0, 10.0}) {
    const helent::ScenarioConfig cfg = default_product_config(eps);
    const std::string two = helent::to_csv(helent::run_sweep(cfg, {true, 2}));
    const std::string one = helent::to_csv(helent::run_sweep(cfg, {true, 1}));
    deterministic = deterministic && two == first_run[i] && one == first_run[i];
    ++i;
  }

  const bool pass = elapsed < 60.0 && deterministic;
  report(12, "default sweep: time and bytes", pass, elapsed, 60.0);
  CHECK(elapsed < 60.0);
  CHECK(deterministic);
}
