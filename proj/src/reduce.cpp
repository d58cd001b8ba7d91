#include "helent/reduce.hpp"

#include <omp.h>

#include <stdexcept>

#include "helent/spinrep.hpp"

namespace helent {

namespace {

// Fixed chunking decouples the reduction tree from the thread count.
constexpr std::size_t kChunk = 512;

Eigen::Matrix2cd node_transform(double eta, Mode mode, const GridNode& n) {
  const FourMomentum p(1.0, n.tau, n.theta, n.phi);
  return mode == Mode::helicity ? helicity_rotation(eta, p)
                                : wigner_rotation(eta, p);
}

void check_amps(std::span<const SingleParticleAmplitude> amps) {
  if (amps.empty()) {
    throw std::invalid_argument("cross moments: empty factor list");
  }
  const MomentumGrid* grid = amps.front().grid.get();
  for (const auto& a : amps) {
    if (a.grid.get() != grid || a.values.size() != grid->size()) {
      throw std::invalid_argument("cross moments: factors must share one grid");
    }
  }
}

// Accumulates nodes [begin, end) in index order.
void accumulate_range(double eta, Mode mode,
                      std::span<const SingleParticleAmplitude> amps,
                      std::size_t begin, std::size_t end,
                      std::vector<Eigen::Matrix2cd>& acc) {
  const int r = static_cast<int>(amps.size());
  const auto& nodes = amps.front().grid->nodes();
  std::vector<Eigen::Vector2cd> boosted(r);
  for (std::size_t i = begin; i < end; ++i) {
    const Eigen::Matrix2cd u = node_transform(eta, mode, nodes[i]);
    for (int k = 0; k < r; ++k) {
      boosted[k] = u * amps[k].values[i];
    }
    const double w = nodes[i].weight;
    for (int k = 0; k < r; ++k) {
      const Eigen::Vector2cd wk = w * boosted[k];
      for (int l = 0; l < r; ++l) {
        acc[k * r + l] += wk * boosted[l].adjoint();
      }
    }
  }
}

}  // namespace

CrossMoments boosted_cross_moments(double eta, Mode mode,
                                   std::span<const SingleParticleAmplitude> amps,
                                   const ExecPolicy& policy) {
  check_amps(amps);
  const int r = static_cast<int>(amps.size());
  const std::size_t n = amps.front().grid->size();
  const std::size_t n_chunks = (n + kChunk - 1) / kChunk;

  std::vector<std::vector<Eigen::Matrix2cd>> partials(
      n_chunks, std::vector<Eigen::Matrix2cd>(r * r, Eigen::Matrix2cd::Zero()));

  const int threads =
      policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads) \
    if (policy.parallel)
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(begin + kChunk, n);
    accumulate_range(eta, mode, amps, begin, end, partials[c]);
  }

  CrossMoments out(r);
  for (std::size_t c = 0; c < n_chunks; ++c) {
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        out.at(k, l) += partials[c][k * r + l];
      }
    }
  }
  return out;
}

CrossMoments boosted_cross_moments_reference(
    double eta, Mode mode, std::span<const SingleParticleAmplitude> amps) {
  check_amps(amps);
  const int r = static_cast<int>(amps.size());
  const auto& nodes = amps.front().grid->nodes();
  CrossMoments out(r);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Eigen::Matrix2cd u = node_transform(eta, mode, nodes[i]);
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        const Eigen::Vector2cd bk = u * amps[k].values[i];
        const Eigen::Vector2cd bl = u * amps[l].values[i];
        out.at(k, l) += nodes[i].weight * bk * bl.adjoint();
      }
    }
  }
  return out;
}

}  // namespace helent
