#include "pascube/walk.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pascube/extbinom.hpp"

namespace pascube {

namespace {

BigCount pow3(std::int64_t e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return out;
}

ExactProb ratio(const BigCount& num, const BigCount& den) {
  ExactProb p(num, den);
  p.canonicalize();
  return p;
}

void require_time(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0, got " + std::to_string(t));
}

}  // namespace

LatticePoint to_lattice(const StepCounts& counts, std::int64_t t) {
  return {counts.w - counts.u, counts.v - t};
}

std::optional<StepCounts> to_step_counts(const LayerCoord& coord) {
  const auto [x, y, t] = coord;
  if (t < 0 || (x - y) % 2 != 0) return std::nullopt;
  const StepCounts s{t - (x + y) / 2, y + t, t + (x - y) / 2};
  if (s.u < 0 || s.v < 0 || s.w < 0 || s.u > 3 * t || s.v > 3 * t || s.w > 3 * t)
    return std::nullopt;
  return s;
}

ExactProb prob_xy(const LayerCoord& coord) {
  if (!to_step_counts(coord)) return ExactProb{0};
  const auto [x, y, t] = coord;
  const std::int64_t half = (x - y) / 2;
  const CoeffIndex idx{2 * t - half, y + t, t + half};
  return ratio(ext_binom_closed(idx), pow3(3 * t));
}

ExactProb prob_slice(std::int64_t x_prime, std::int64_t t) {
  if (t < 0 || x_prime < -t || x_prime > t) return ExactProb{0};
  const CoeffIndex idx{2 * t - x_prime, t, t + x_prime};
  return ratio(ext_binom_closed(idx), pow3(3 * t));
}

ExactDistribution exact_distribution(std::int64_t t) {
  require_time(t);
  ExactDistribution dist{t, {}};
  const std::int64_t n = 3 * t;
  for (std::int64_t u = 0; u <= n; ++u) {
    for (std::int64_t v = 0; u + v <= n; ++v) {
      const StepCounts s{u, v, n - u - v};
      const LatticePoint p = to_lattice(s, t);
      dist.mass.emplace(p, prob_xy({p.x, p.y, t}));
    }
  }
  return dist;
}

std::mt19937_64 block_generator(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

unsigned draw_direction(std::mt19937_64& gen) {
  // 2^64 mod 3 == 1, so only the single top value is rejected.
  constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r;
  do {
    r = gen();
  } while (r == limit);
  return static_cast<unsigned>(r % 3);
}

EmpiricalDistribution simulate(const WalkConfig& config, unsigned threads) {
  require_time(config.t);
  if (config.num_walks == 0) throw std::invalid_argument("num_walks must be >= 1");
  if (config.num_walks > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::invalid_argument("num_walks must be < 2^63");

  const std::int64_t steps = 3 * config.t;
  const auto side = static_cast<std::size_t>(steps + 1);
  const std::uint64_t blocks = (config.num_walks + kWalksPerBlock - 1) / kWalksPerBlock;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

  // Histogram indexed by (v, w); u is implied. Integer addition commutes, so
  // the merge is independent of which worker ran which block.
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(side * side, 0));
  std::atomic<std::uint64_t> next_block{0};

  auto worker = [&](unsigned id) {
    auto& hist = partial[id];
    for (std::uint64_t b = next_block++; b < blocks; b = next_block++) {
      auto gen = block_generator(config.seed, b);
      const std::uint64_t begin = b * kWalksPerBlock;
      const std::uint64_t end = std::min(config.num_walks, begin + kWalksPerBlock);
      for (std::uint64_t i = begin; i < end; ++i) {
        std::size_t counts[3] = {0, 0, 0};
        for (std::int64_t s = 0; s < steps; ++s) ++counts[draw_direction(gen)];
        ++hist[counts[1] * side + counts[2]];
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
  }

  EmpiricalDistribution out{config.t, config.num_walks, {}};
  for (std::size_t v = 0; v < side; ++v) {
    for (std::size_t w = 0; v + w < side; ++w) {
      std::uint64_t total = 0;
      for (const auto& hist : partial) total += hist[v * side + w];
      if (total == 0) continue;
      const StepCounts s{steps - static_cast<std::int64_t>(v + w), static_cast<std::int64_t>(v),
                         static_cast<std::int64_t>(w)};
      out.counts.emplace(to_lattice(s, config.t), total);
    }
  }
  return out;
}

ExactProb tv_distance(const EmpiricalDistribution& empirical, const ExactDistribution& exact) {
  if (empirical.t != exact.t)
    throw std::invalid_argument("tv_distance: empirical t=" + std::to_string(empirical.t) +
                                " but exact t=" + std::to_string(exact.t));
  if (empirical.total == 0) throw std::invalid_argument("tv_distance: empty empirical sample");

  const BigCount n{std::to_string(empirical.total)};
  ExactProb sum{0};
  for (const auto& [p, mass] : exact.mass) {
    const auto it = empirical.counts.find(p);
    const BigCount count = it == empirical.counts.end() ? BigCount{0} : BigCount{std::to_string(it->second)};
    sum += abs(ratio(count, n) - mass);
  }
  for (const auto& [p, count] : empirical.counts) {
    if (!exact.mass.contains(p)) sum += ratio(BigCount{std::to_string(count)}, n);
  }
  ExactProb out = sum / 2;
  out.canonicalize();
  return out;
}

}  // namespace pascube
