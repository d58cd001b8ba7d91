#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "helent/states.hpp"

namespace helent {

/// Which little-group element mixes the discrete labels under a boost:
/// the helicity rotation Z or the Wigner rotation W.
enum class Mode { helicity, spin };

struct ExecPolicy {
  bool parallel = true;
  int threads = 0;  // 0 = runtime default
};

/// r x r block matrix of boosted 2x2 cross moments for one particle's
/// factor list:
///   M(k, l) = sum_i w_i (U_i a_i^k) (U_i a_i^l)^dag
/// with U_i the helicity or Wigner rotation at node i.
class CrossMoments {
 public:
  CrossMoments(int rank)
      : rank_(rank), blocks_(rank * rank, Eigen::Matrix2cd::Zero()) {}

  int rank() const { return rank_; }
  Eigen::Matrix2cd& at(int k, int l) { return blocks_[k * rank_ + l]; }
  const Eigen::Matrix2cd& at(int k, int l) const {
    return blocks_[k * rank_ + l];
  }

 private:
  int rank_;
  std::vector<Eigen::Matrix2cd> blocks_;
};

/// OpenMP kernel. Nodes are split into fixed-size chunks; chunk partials are
/// combined serially in chunk order, so the result is bit-identical for any
/// thread count.
CrossMoments boosted_cross_moments(double eta, Mode mode,
                                   std::span<const SingleParticleAmplitude> amps,
                                   const ExecPolicy& policy = {});

/// Straight-loop serial implementation kept as the reference for the kernel.
CrossMoments boosted_cross_moments_reference(
    double eta, Mode mode, std::span<const SingleParticleAmplitude> amps);

}  // namespace helent
