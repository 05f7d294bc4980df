#pragma once

#include <compare>
#include <cstdint>

#include <gmpxx.h>

namespace pascube {

/// Arbitrary-precision non-negative coefficient value.
using BigCount = mpz_class;

/// Exact rational probability, always kept in canonical (lowest-terms) form.
using ExactProb = mpq_class;

/// Index (a, b, c) of the extended binomial coefficient with superscript a,
/// subscript b and layer c. Indices outside 0 <= b <= a, c >= 0 are legal
/// and evaluate to zero.
struct CoeffIndex {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  bool in_range() const { return a >= 0 && c >= 0 && b >= 0 && b <= a; }

  friend auto operator<=>(const CoeffIndex&, const CoeffIndex&) = default;
};

/// Evaluation route for an extended binomial coefficient.
enum class Route { recurrence, closed, convolution };

}  // namespace pascube
