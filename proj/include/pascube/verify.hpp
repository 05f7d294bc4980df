#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pascube {

/// Outcome of one identity sweep. `failures` keeps the first few offending
/// cases for diagnostics.
struct SweepResult {
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

/// Over 0 <= b <= a <= a_max, 0 <= c <= c_max: recurrence == closed form,
/// convolution == closed form (c >= 1), and the factorial identity
/// value * b! c! (a-b)! == (a+c)!. One check per index triple.
SweepResult verify_routes(std::int64_t a_max, std::int64_t c_max);

/// value(a, b, c) == value(a, a-b, c) under every applicable route.
SweepResult verify_symmetry(std::int64_t a_max, std::int64_t c_max);

/// Over c >= 1: convolution == recurrence, and the three-neighbour rule holds
/// pointwise on closed-form values at interior indices.
SweepResult verify_convolution(std::int64_t a_max, std::int64_t c_max);

/// For layers 1..n_max: sum == 3^(n-1), every Staib entry equals the cube
/// coefficient at its mapped coordinate, and the map is injective onto the
/// anti-diagonal.
SweepResult verify_layers(std::int64_t n_max);

}  // namespace pascube
