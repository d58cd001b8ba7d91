#include "helent/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace helent {

namespace {

int slot(Helicity h) { return h == Helicity::plus ? 0 : 1; }

void require_shared_grid(const std::vector<SingleParticleAmplitude>& a,
                         const std::vector<SingleParticleAmplitude>& b) {
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument("low_rank: factor lists must be non-empty and equal length");
  }
  const MomentumGrid* grid = a.front().grid.get();
  for (const auto& f : a) {
    if (f.grid.get() != grid || f.values.size() != grid->size()) {
      throw std::invalid_argument("low_rank: all factors must share one grid");
    }
  }
  for (const auto& f : b) {
    if (f.grid.get() != grid || f.values.size() != grid->size()) {
      throw std::invalid_argument("low_rank: all factors must share one grid");
    }
  }
}

}  // namespace

WavePacket::WavePacket(double epsilon) : epsilon_(epsilon) {
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
    throw std::invalid_argument("WavePacket: width must be positive");
  }
  norm_const_ = std::pow(std::numbers::pi, -0.75) * std::pow(epsilon, -1.5);
}

double WavePacket::operator()(double p_mag) const {
  const double x = p_mag / epsilon_;
  return norm_const_ * std::exp(-0.5 * x * x);
}

WavePacket gaussian_wavepacket(double epsilon) { return WavePacket(epsilon); }

double SingleParticleAmplitude::norm() const {
  long double acc = 0.0L;
  const auto& ns = grid->nodes();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    acc += static_cast<long double>(ns[i].weight) * values[i].squaredNorm();
  }
  return std::sqrt(static_cast<double>(acc));
}

SingleParticleAmplitude packet_amplitude(
    std::shared_ptr<const MomentumGrid> grid, const WavePacket& packet,
    Helicity h) {
  if (!grid) throw std::invalid_argument("packet_amplitude: null grid");
  SingleParticleAmplitude amp;
  amp.grid = std::move(grid);
  amp.values.resize(amp.grid->size(), Eigen::Vector2cd::Zero());
  const int s = slot(h);
  const auto& nodes = amp.grid->nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    amp.values[i](s) = packet(nodes[i].p_mag);
  }
  return amp;
}

SingleParticleAmplitude normalized(SingleParticleAmplitude amp) {
  const double n = amp.norm();
  if (!(n > 1e-150)) {
    throw std::invalid_argument("normalized: amplitude has zero norm");
  }
  for (auto& v : amp.values) v /= n;
  return amp;
}

std::complex<double> inner(const SingleParticleAmplitude& a,
                           const SingleParticleAmplitude& b) {
  if (a.grid.get() != b.grid.get()) {
    throw std::invalid_argument("inner: amplitudes live on different grids");
  }
  long double re = 0.0L, im = 0.0L;
  const auto& ns = a.grid->nodes();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::complex<double> d = a.values[i].dot(b.values[i]);  // conj(a) . b
    re += static_cast<long double>(ns[i].weight) * d.real();
    im += static_cast<long double>(ns[i].weight) * d.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

TwoParticleState TwoParticleState::low_rank(
    std::shared_ptr<const MomentumGrid> grid,
    std::vector<std::complex<double>> coeffs,
    std::vector<SingleParticleAmplitude> a_factors,
    std::vector<SingleParticleAmplitude> b_factors, Symmetrization sym) {
  if (!grid) throw std::invalid_argument("low_rank: null grid");
  if (coeffs.size() != a_factors.size()) {
    throw std::invalid_argument("low_rank: coefficient count must match rank");
  }
  require_shared_grid(a_factors, b_factors);
  if (a_factors.front().grid.get() != grid.get()) {
    throw std::invalid_argument("low_rank: factors must live on the given grid");
  }

  if (sym != Symmetrization::none) {
    // Exchange swaps the full single-particle factors A_k <-> B_k.
    const double sign = sym == Symmetrization::symmetric ? 1.0 : -1.0;
    const std::size_t r = coeffs.size();
    for (std::size_t k = 0; k < r; ++k) {
      coeffs.push_back(sign * coeffs[k]);
      a_factors.push_back(b_factors[k]);
      b_factors.push_back(a_factors[k]);
    }
  }

  TwoParticleState state;
  state.grid_ = std::move(grid);
  state.coeffs_ = std::move(coeffs);
  state.a_factors_ = std::move(a_factors);
  state.b_factors_ = std::move(b_factors);
  return normalize(state);
}

TwoParticleState product_state(const WavePacket& packet_a,
                               const WavePacket& packet_b, Helicity h_a,
                               Helicity h_b,
                               std::shared_ptr<const MomentumGrid> grid,
                               Symmetrization sym) {
  auto a = packet_amplitude(grid, packet_a, h_a);
  auto b = packet_amplitude(grid, packet_b, h_b);
  return TwoParticleState::low_rank(grid, {1.0}, {std::move(a)},
                                    {std::move(b)}, sym);
}

TwoParticleState correlated_state(const WavePacket& packet_1,
                                  const WavePacket& packet_2,
                                  std::shared_ptr<const MomentumGrid> grid,
                                  Symmetrization sym) {
  auto a1 = packet_amplitude(grid, packet_1, Helicity::plus);
  auto b1 = packet_amplitude(grid, packet_2, Helicity::plus);
  auto a2 = packet_amplitude(grid, packet_2, Helicity::minus);
  auto b2 = packet_amplitude(grid, packet_1, Helicity::minus);
  return TwoParticleState::low_rank(grid, {1.0, 1.0},
                                    {std::move(a1), std::move(a2)},
                                    {std::move(b1), std::move(b2)}, sym);
}

double state_norm(const TwoParticleState& state) {
  const auto& c = state.coeffs();
  const auto& a = state.a_factors();
  const auto& b = state.b_factors();
  const int r = state.rank();
  std::complex<double> acc = 0.0;
  for (int k = 0; k < r; ++k) {
    for (int l = 0; l < r; ++l) {
      acc += c[k] * std::conj(c[l]) * inner(a[l], a[k]) * inner(b[l], b[k]);
    }
  }
  return std::sqrt(std::max(acc.real(), 0.0));
}

TwoParticleState normalize(const TwoParticleState& state) {
  const double n = state_norm(state);
  // Scale of the un-cancelled sum, to tell exact cancellation from a small
  // amplitude.
  double scale = 0.0;
  for (int k = 0; k < state.rank(); ++k) {
    scale += std::norm(state.coeffs()[k]) *
             std::norm(state.a_factors()[k].norm() *
                       state.b_factors()[k].norm());
  }
  if (!(n * n > 1e-12 * scale) || n == 0.0) {
    throw std::invalid_argument("normalize: state cancels to zero");
  }
  TwoParticleState out = state;
  for (auto& c : out.coeffs_) c /= n;
  return out;
}

DenseTwoParticleState densify(const TwoParticleState& state) {
  const std::size_t n = state.grid()->size();
  DenseTwoParticleState dense;
  dense.grid = state.grid();
  dense.g.assign(n * n, Eigen::Vector4cd::Zero());
  const int r = state.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::Vector4cd g = Eigen::Vector4cd::Zero();
      for (int k = 0; k < r; ++k) {
        const Eigen::Vector2cd& av = state.a_factors()[k].values[i];
        const Eigen::Vector2cd& bv = state.b_factors()[k].values[j];
        const std::complex<double> c = state.coeffs()[k];
        g(0) += c * av(0) * bv(0);
        g(1) += c * av(0) * bv(1);
        g(2) += c * av(1) * bv(0);
        g(3) += c * av(1) * bv(1);
      }
      dense.g[i * n + j] = g;
    }
  }
  return dense;
}

}  // namespace helent
