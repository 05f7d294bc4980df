#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>

#include "pascube/types.hpp"

namespace pascube {

/// Point (x, y) on pyramid layer 3t+1. The apex-facing centre of the layer is
/// (0, 0); only points with x - y even carry mass.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct LayerCoord {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t t = 0;

  friend auto operator<=>(const LayerCoord&, const LayerCoord&) = default;
};

/// How many of the 3t steps went each of the three ways.
struct StepCounts {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t w = 0;

  friend auto operator<=>(const StepCounts&, const StepCounts&) = default;
};

/// Step counts -> layer point: x = w - u, y = v - t.
LatticePoint to_lattice(const StepCounts& counts, std::int64_t t);

/// Inverse of to_lattice; nullopt for off-lattice or out-of-layer points.
std::optional<StepCounts> to_step_counts(const LayerCoord& coord);

/// Probability mass at (x, y) on layer 3t+1:
///   C(2t - (x-y)/2, y + t; t + (x-y)/2) / 3^(3t).
/// Zero off the lattice.
ExactProb prob_xy(const LayerCoord& coord);

/// Middle-row slice C(2t - x', t; t + x') / 3^(3t) for |x'| <= t, else 0.
/// Not normalized over x'.
ExactProb prob_slice(std::int64_t x_prime, std::int64_t t);

struct ExactDistribution {
  std::int64_t t = 0;
  std::map<LatticePoint, ExactProb> mass;
};

ExactDistribution exact_distribution(std::int64_t t);

struct WalkConfig {
  std::int64_t t = 0;
  std::uint64_t num_walks = 1;
  std::uint64_t seed = 0;
};

struct EmpiricalDistribution {
  std::int64_t t = 0;
  std::uint64_t total = 0;
  std::map<LatticePoint, std::uint64_t> counts;
};

/// Walks are grouped into fixed blocks of this many; each block draws from
/// its own generator, so the result does not depend on the thread count.
inline constexpr std::uint64_t kWalksPerBlock = 1u << 16;

/// MT19937-64 seeded through std::seed_seq with the 32-bit halves of
/// (seed, block). Both algorithms are fixed by the C++ standard.
std::mt19937_64 block_generator(std::uint64_t seed, std::uint64_t block);

/// Uniform direction in {0, 1, 2} by rejection on the raw 64-bit output.
unsigned draw_direction(std::mt19937_64& gen);

/// Runs num_walks independent walks of 3t uniform steps. threads == 0 uses
/// the hardware concurrency. Deterministic in (t, num_walks, seed).
EmpiricalDistribution simulate(const WalkConfig& config, unsigned threads = 0);

/// Half the L1 distance between the normalized empirical counts and the exact
/// distribution, computed exactly. Throws std::invalid_argument when the two
/// were built for different t.
ExactProb tv_distance(const EmpiricalDistribution& empirical,
                      const ExactDistribution& exact);

}  // namespace pascube
