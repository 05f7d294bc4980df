#include "pascube/verify.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "pascube/extbinom.hpp"
#include "pascube/pyramid.hpp"

namespace pascube {

namespace {

constexpr std::size_t kMaxReported = 10;

void require_bounds(std::int64_t a_max, std::int64_t c_max) {
  if (a_max < 0 || c_max < 0) throw std::invalid_argument("sweep bounds must be >= 0");
}

std::string describe(const CoeffIndex& idx, const std::string& what) {
  std::ostringstream os;
  os << "(a=" << idx.a << ", b=" << idx.b << ", c=" << idx.c << "): " << what;
  return os.str();
}

void record(SweepResult& result, bool pass, const std::string& what) {
  ++result.checked;
  if (pass) return;
  ++result.failed;
  if (result.failures.size() < kMaxReported) result.failures.push_back(what);
}

template <class Check>
void for_each_triple(std::int64_t a_max, std::int64_t c_lo, std::int64_t c_max, Check&& check) {
  for (std::int64_t c = c_lo; c <= c_max; ++c)
    for (std::int64_t a = 0; a <= a_max; ++a)
      for (std::int64_t b = 0; b <= a; ++b) check(CoeffIndex{a, b, c});
}

}  // namespace

SweepResult verify_routes(std::int64_t a_max, std::int64_t c_max) {
  require_bounds(a_max, c_max);
  shared_cube().reserve(a_max, c_max);
  SweepResult result;
  result.suite = "routes";
  for_each_triple(a_max, 0, c_max, [&](const CoeffIndex& idx) {
    const BigCount closed = ext_binom_closed(idx);
    std::string why;
    if (ext_binom_rec(idx) != closed) why += "recurrence != closed; ";
    if (idx.c >= 1 && ext_binom_conv(idx) != closed) why += "convolution != closed; ";
    if (closed * factorial(idx.b) * factorial(idx.c) * factorial(idx.a - idx.b) !=
        factorial(idx.a + idx.c))
      why += "factorial identity fails; ";
    record(result, why.empty(), describe(idx, why));
  });
  return result;
}

SweepResult verify_symmetry(std::int64_t a_max, std::int64_t c_max) {
  require_bounds(a_max, c_max);
  shared_cube().reserve(a_max, c_max);
  SweepResult result;
  result.suite = "symmetry";
  for_each_triple(a_max, 0, c_max, [&](const CoeffIndex& idx) {
    const CoeffIndex mirror = symmetry_pair(idx);
    bool pass = ext_binom_rec(idx) == ext_binom_rec(mirror) &&
                ext_binom_closed(idx) == ext_binom_closed(mirror);
    if (idx.c >= 1) pass = pass && ext_binom_conv(idx) == ext_binom_conv(mirror);
    record(result, pass, describe(idx, "value differs from its mirror"));
  });
  return result;
}

SweepResult verify_convolution(std::int64_t a_max, std::int64_t c_max) {
  require_bounds(a_max, c_max);
  shared_cube().reserve(a_max, c_max);
  SweepResult result;
  result.suite = "convolution";
  for_each_triple(a_max, 1, c_max, [&](const CoeffIndex& idx) {
    std::string why;
    if (ext_binom_conv(idx) != ext_binom_rec(idx)) why += "convolution != recurrence; ";
    if (idx.a > idx.b && idx.b > 0) {
      const BigCount rhs = ext_binom_closed({idx.a - 1, idx.b - 1, idx.c}) +
                           ext_binom_closed({idx.a - 1, idx.b, idx.c}) +
                           ext_binom_closed({idx.a, idx.b, idx.c - 1});
      if (ext_binom_closed(idx) != rhs) why += "three-neighbour rule fails; ";
    }
    record(result, why.empty(), describe(idx, why));
  });
  return result;
}

SweepResult verify_layers(std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("layer bound must be >= 0");
  SweepResult result;
  result.suite = "layersum";
  if (n_max >= 1) shared_cube().reserve(n_max - 1, n_max - 1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const LayerGrid layer = build_layer(n);
    BigCount power;
    mpz_ui_pow_ui(power.get_mpz_t(), 3, static_cast<unsigned long>(n - 1));

    std::string why;
    if (layer.sum() != power) why += "sum != 3^(n-1); ";
    std::set<CubeCoord> image;
    for (const auto& [pos, coord] : layer_to_cube(n)) {
      if (coord.x + coord.y + coord.z != n - 1) why += "point off the anti-diagonal; ";
      if (coeff_at_cube(coord) != layer.entry(pos.r, pos.k)) why += "entry != cube coefficient; ";
      image.insert(coord);
    }
    if (static_cast<std::int64_t>(image.size()) != n * (n + 1) / 2) why += "map not injective; ";

    std::ostringstream label;
    label << "layer " << n << ": " << why;
    record(result, why.empty(), label.str());
  }
  return result;
}

}  // namespace pascube
