#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "helent/grid.hpp"

namespace helent {

/// Isotropic Gaussian momentum distribution
///   f(p) = pi^{-3/4} eps^{-3/2} exp(-|p|^2 / (2 eps^2)),
/// unit normalized under d^3p. Width eps is in units of the particle mass.
class WavePacket {
 public:
  explicit WavePacket(double epsilon);
  double width() const { return epsilon_; }
  double operator()(double p_mag) const;

 private:
  double epsilon_;
  double norm_const_;
};

WavePacket gaussian_wavepacket(double epsilon);

enum class Helicity { plus, minus };  // +1/2, -1/2

/// Two helicity components per grid node.
struct SingleParticleAmplitude {
  std::shared_ptr<const MomentumGrid> grid;
  std::vector<Eigen::Vector2cd> values;

  double norm() const;  // sqrt(sum_i w_i |v_i|^2)
};

SingleParticleAmplitude packet_amplitude(
    std::shared_ptr<const MomentumGrid> grid, const WavePacket& packet,
    Helicity h);

SingleParticleAmplitude normalized(SingleParticleAmplitude amp);

/// Grid inner product <a|b> = sum_i w_i a_i^dag b_i.
std::complex<double> inner(const SingleParticleAmplitude& a,
                           const SingleParticleAmplitude& b);

enum class Symmetrization { none, symmetric, antisymmetric };

/// Two-particle amplitude stored as a low-rank sum
///   g(p, q) = sum_k c_k A_k(p) (x) B_k(q)
/// of single-particle factors on one shared grid. Normalized on
/// construction. The optional exchange symmetrization swaps the full
/// single-particle factors (momentum and helicity together) and fails if
/// the result cancels to zero.
class TwoParticleState {
 public:
  static TwoParticleState low_rank(
      std::shared_ptr<const MomentumGrid> grid,
      std::vector<std::complex<double>> coeffs,
      std::vector<SingleParticleAmplitude> a_factors,
      std::vector<SingleParticleAmplitude> b_factors,
      Symmetrization sym = Symmetrization::none);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  const std::vector<SingleParticleAmplitude>& a_factors() const {
    return a_factors_;
  }
  const std::vector<SingleParticleAmplitude>& b_factors() const {
    return b_factors_;
  }
  const std::shared_ptr<const MomentumGrid>& grid() const { return grid_; }

 private:
  TwoParticleState() = default;

  std::shared_ptr<const MomentumGrid> grid_;
  std::vector<std::complex<double>> coeffs_;
  std::vector<SingleParticleAmplitude> a_factors_;
  std::vector<SingleParticleAmplitude> b_factors_;

  friend TwoParticleState normalize(const TwoParticleState& state);
};

/// Rank-1 product state f_a(p) f_b(q) |h_a h_b>.
TwoParticleState product_state(const WavePacket& packet_a,
                               const WavePacket& packet_b, Helicity h_a,
                               Helicity h_b,
                               std::shared_ptr<const MomentumGrid> grid,
                               Symmetrization sym = Symmetrization::none);

/// Rank-2 momentum-helicity correlated state
///   N [ f1(p) f2(q) |++> + f2(p) f1(q) |--> ].
/// Equal packets give a Bell state; packets of different widths tune the
/// coherence through their overlap.
TwoParticleState correlated_state(const WavePacket& packet_1,
                                  const WavePacket& packet_2,
                                  std::shared_ptr<const MomentumGrid> grid,
                                  Symmetrization sym = Symmetrization::none);

/// Rescales to unit grid-discrete norm; throws on a (numerically) zero state.
TwoParticleState normalize(const TwoParticleState& state);

double state_norm(const TwoParticleState& state);

/// Dense amplitude over node pairs, basis order (++, +-, -+, --) in the
/// second index. Brute-force oracle representation; quadratic in grid size,
/// only meant for coarse grids.
struct DenseTwoParticleState {
  std::shared_ptr<const MomentumGrid> grid;
  std::vector<Eigen::Vector4cd> g;  // g[i * n + j]
};

DenseTwoParticleState densify(const TwoParticleState& state);

}  // namespace helent
