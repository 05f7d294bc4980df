#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "pascube/types.hpp"

namespace pascube {

/// Ordinary binomial coefficient C(n, k). Zero for k < 0 or k > n.
BigCount binomial(std::int64_t n, std::int64_t k);

BigCount factorial(std::int64_t n);

/// Dense memo of the Pascal's cube filled by the three-neighbour recurrence
///
///   C(a, b; c) = C(a-1, b-1; c) + C(a-1, b; c) + C(a, b; c-1)
///
/// with layer 0 built from Pascal's rule. The table grows on demand; lookups
/// take a shared lock, growth takes an exclusive lock, so readers never see a
/// partially filled entry.
class RecurrenceCube {
 public:
  RecurrenceCube() = default;
  RecurrenceCube(const RecurrenceCube&) = delete;
  RecurrenceCube& operator=(const RecurrenceCube&) = delete;

  BigCount value(const CoeffIndex& idx);

  /// Ensure every index with a <= a_max and c <= c_max is resident.
  void reserve(std::int64_t a_max, std::int64_t c_max);

  /// Current extent as (a_max, c_max); (-1, -1) when empty.
  std::pair<std::int64_t, std::int64_t> extent() const;

 private:
  std::size_t offset(std::int64_t a, std::int64_t b, std::int64_t c) const;
  const BigCount& at(std::int64_t a, std::int64_t b, std::int64_t c) const;
  void grow(std::int64_t a_max, std::int64_t c_max);

  mutable std::shared_mutex mutex_;
  std::int64_t a_max_ = -1;
  std::int64_t c_max_ = -1;
  std::vector<BigCount> cells_;
};

/// Process-wide cube shared by the recurrence route.
RecurrenceCube& shared_cube();

BigCount ext_binom_rec(const CoeffIndex& idx);

/// C(b+c, c) * C(a+c, b+c), i.e. the trinomial (a+c)! / (b! c! (a-b)!).
BigCount ext_binom_closed(const CoeffIndex& idx);

/// One-step convolution over the layer below:
///   sum_{n<=a} sum_{m<=b} C(n, m) * C(a-n, b-m; c-1)
/// with the layer c-1 taken from the closed form. Throws
/// std::invalid_argument for c == 0.
BigCount ext_binom_conv(const CoeffIndex& idx);

BigCount ext_binom(const CoeffIndex& idx, Route route);

/// Reflection (a, b, c) -> (a, a-b, c). Throws std::invalid_argument unless
/// 0 <= b <= a.
CoeffIndex symmetry_pair(const CoeffIndex& idx);

}  // namespace pascube
