#include "helent/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "helent/spinrep.hpp"

namespace helent {

namespace {

using namespace std::complex_literals;

Eigen::Matrix4cd sigma_y_pair() {
  Eigen::Matrix2cd sy;
  sy << 0.0, -1.0i, 1.0i, 0.0;
  return kron2(sy, sy);
}

}  // namespace

DensityMatrix2 reduced_single(const SingleParticleAmplitude& amplitude,
                              double eta, Mode mode,
                              const ExecPolicy& policy) {
  const CrossMoments m =
      boosted_cross_moments(eta, mode, std::span(&amplitude, 1), policy);
  return m.at(0, 0);
}

DensityMatrix4 reduced_two(const TwoParticleState& state, double eta,
                           Mode mode, const ExecPolicy& policy) {
  const CrossMoments ma =
      boosted_cross_moments(eta, mode, std::span(state.a_factors()), policy);
  const CrossMoments mb =
      boosted_cross_moments(eta, mode, std::span(state.b_factors()), policy);
  const int r = state.rank();
  DensityMatrix4 rho = DensityMatrix4::Zero();
  for (int k = 0; k < r; ++k) {
    for (int l = 0; l < r; ++l) {
      const std::complex<double> c =
          state.coeffs()[k] * std::conj(state.coeffs()[l]);
      rho += c * kron2(ma.at(k, l), mb.at(k, l));
    }
  }
  return rho;
}

DensityMatrix4 reduced_two_dense(const DenseTwoParticleState& state,
                                 double eta, Mode mode) {
  const auto& nodes = state.grid->nodes();
  const std::size_t n = nodes.size();

  std::vector<Eigen::Matrix2cd> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FourMomentum p(1.0, nodes[i].tau, nodes[i].theta, nodes[i].phi);
    u[i] = mode == Mode::helicity ? helicity_rotation(eta, p)
                                  : wigner_rotation(eta, p);
  }

  DensityMatrix4 rho = DensityMatrix4::Zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Eigen::Vector4cd t = kron2(u[i], u[j]) * state.g[i * n + j];
      rho += (nodes[i].weight * nodes[j].weight) * t * t.adjoint();
    }
  }
  return rho;
}

DensityMatrix4 spin_flip(const DensityMatrix4& rho) {
  const Eigen::Matrix4cd y = sigma_y_pair();
  return y * rho.conjugate() * y;
}

double concurrence_from_flipped(const DensityMatrix4& rho,
                                const DensityMatrix4& rho_tilde) {
  const Eigen::Matrix4cd m = rho * rho_tilde;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalInstabilityError("concurrence: eigensolver failed");
  }
  std::array<double, 4> k{};
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-6) {
      throw NumericalInstabilityError(
          "concurrence: eigenvalue has a large imaginary part; the density "
          "matrix upstream is not physical");
    }
    // Eigenvalues below the solver noise floor would square-root to ~1e-8
    // and bias the k differences; clamp them to zero.
    k[i] = ev.real() > 1e-10 ? std::sqrt(ev.real()) : 0.0;
  }
  std::sort(k.begin(), k.end(), std::greater<>());
  return std::max(k[0] - k[1] - k[2] - k[3], 0.0);
}

double wootters_concurrence(const DensityMatrix4& rho) {
  return concurrence_from_flipped(rho, spin_flip(rho));
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  double s = 0.0;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lam = solver.eigenvalues()(i);
    if (lam > 0.0) {
      s -= lam * std::log2(lam);
    }
  }
  return std::max(s, 0.0);
}

double purity(const Eigen::MatrixXcd& rho) {
  return (rho * rho).trace().real();
}

DensityMatrix2 trace_out_second(const DensityMatrix4& rho) {
  DensityMatrix2 out;
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      out(a, ap) = rho(a * 2, ap * 2) + rho(a * 2 + 1, ap * 2 + 1);
    }
  }
  return out;
}

DensityMatrix2 trace_out_first(const DensityMatrix4& rho) {
  DensityMatrix2 out;
  for (int b = 0; b < 2; ++b) {
    for (int bp = 0; bp < 2; ++bp) {
      out(b, bp) = rho(b, bp) + rho(2 + b, 2 + bp);
    }
  }
  return out;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace helent
