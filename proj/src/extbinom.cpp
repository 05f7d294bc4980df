#include "pascube/extbinom.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

namespace pascube {

namespace {

const BigCount kZero{0};

std::size_t triangle_size(std::int64_t a_max) {
  const auto n = static_cast<std::size_t>(a_max + 1);
  return n * (n + 1) / 2;
}

}  // namespace

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return BigCount{0};
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigCount factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// ---------------------------------------------------------------------------
// RecurrenceCube

std::size_t RecurrenceCube::offset(std::int64_t a, std::int64_t b,
                                   std::int64_t c) const {
  const auto ua = static_cast<std::size_t>(a);
  return static_cast<std::size_t>(c) * triangle_size(a_max_) +
         ua * (ua + 1) / 2 + static_cast<std::size_t>(b);
}

const BigCount& RecurrenceCube::at(std::int64_t a, std::int64_t b,
                                   std::int64_t c) const {
  if (a < 0 || b < 0 || c < 0 || b > a) return kZero;
  return cells_[offset(a, b, c)];
}

std::pair<std::int64_t, std::int64_t> RecurrenceCube::extent() const {
  std::shared_lock lock(mutex_);
  return {a_max_, c_max_};
}

void RecurrenceCube::reserve(std::int64_t a_max, std::int64_t c_max) {
  {
    std::shared_lock lock(mutex_);
    if (a_max <= a_max_ && c_max <= c_max_) return;
  }
  std::unique_lock lock(mutex_);
  if (a_max <= a_max_ && c_max <= c_max_) return;
  grow(std::max(a_max, a_max_), std::max(c_max, c_max_));
}

void RecurrenceCube::grow(std::int64_t a_max, std::int64_t c_max) {
  const std::size_t tri = triangle_size(a_max);
  const auto layers = static_cast<std::size_t>(c_max + 1);
  if (tri > std::numeric_limits<std::size_t>::max() / sizeof(BigCount) / layers)
    throw std::length_error("recurrence cube extent too large: a_max=" +
                            std::to_string(a_max) +
                            " c_max=" + std::to_string(c_max));

  // Built into a fresh table and swapped in only when complete.
  std::vector<BigCount> next(tri * layers);
  auto idx = [tri](std::int64_t a, std::int64_t b, std::int64_t c) {
    const auto ua = static_cast<std::size_t>(a);
    return static_cast<std::size_t>(c) * tri + ua * (ua + 1) / 2 +
           static_cast<std::size_t>(b);
  };
  auto get = [&](std::int64_t a, std::int64_t b, std::int64_t c) -> const BigCount& {
    if (a < 0 || b < 0 || c < 0 || b > a) return kZero;
    return next[idx(a, b, c)];
  };

  for (std::int64_t c = 0; c <= c_max; ++c) {
    for (std::int64_t a = 0; a <= a_max; ++a) {
      for (std::int64_t b = 0; b <= a; ++b) {
        BigCount& cell = next[idx(a, b, c)];
        if (a <= a_max_ && c <= c_max_) {
          cell = at(a, b, c);
        } else if (a == 0) {
          cell = 1;
        } else if (c == 0) {
          cell = get(a - 1, b - 1, 0) + get(a - 1, b, 0);
        } else {
          cell = get(a - 1, b - 1, c) + get(a - 1, b, c) + get(a, b, c - 1);
        }
      }
    }
  }

  cells_ = std::move(next);
  a_max_ = a_max;
  c_max_ = c_max;
}

BigCount RecurrenceCube::value(const CoeffIndex& idx) {
  if (!idx.in_range()) return BigCount{0};
  {
    std::shared_lock lock(mutex_);
    if (idx.a <= a_max_ && idx.c <= c_max_) return at(idx.a, idx.b, idx.c);
  }
  reserve(idx.a, idx.c);
  std::shared_lock lock(mutex_);
  return at(idx.a, idx.b, idx.c);
}

RecurrenceCube& shared_cube() {
  static RecurrenceCube cube;
  return cube;
}

// ---------------------------------------------------------------------------

BigCount ext_binom_rec(const CoeffIndex& idx) { return shared_cube().value(idx); }

BigCount ext_binom_closed(const CoeffIndex& idx) {
  if (!idx.in_range()) return BigCount{0};
  return binomial(idx.b + idx.c, idx.c) * binomial(idx.a + idx.c, idx.b + idx.c);
}

BigCount ext_binom_conv(const CoeffIndex& idx) {
  if (idx.c == 0)
    throw std::invalid_argument("convolution route needs a layer below (c >= 1)");
  if (!idx.in_range()) return BigCount{0};
  BigCount sum{0};
  for (std::int64_t n = 0; n <= idx.a; ++n) {
    for (std::int64_t m = 0; m <= std::min(n, idx.b); ++m) {
      const BigCount below = ext_binom_closed({idx.a - n, idx.b - m, idx.c - 1});
      if (below != 0) sum += binomial(n, m) * below;
    }
  }
  return sum;
}

BigCount ext_binom(const CoeffIndex& idx, Route route) {
  switch (route) {
    case Route::recurrence:
      return ext_binom_rec(idx);
    case Route::closed:
      return ext_binom_closed(idx);
    case Route::convolution:
      return ext_binom_conv(idx);
  }
  throw std::invalid_argument("unknown route");
}

CoeffIndex symmetry_pair(const CoeffIndex& idx) {
  if (!idx.in_range())
    throw std::invalid_argument("symmetry_pair needs 0 <= b <= a and c >= 0");
  return {idx.a, idx.a - idx.b, idx.c};
}

}  // namespace pascube
