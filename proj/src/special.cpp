#include "pascube/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pascube::special {

namespace {

// Below this the asymptotic series is not used; the argument is shifted up
// with the recurrences psi(x) = psi(x+1) - 1/x and psi'(x) = psi'(x+1) + 1/x^2.
constexpr double kShift = 10.0;

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error(std::string(name) + " needs a finite x > 0, got " + std::to_string(x));
}

}  // namespace

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < kShift) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // ln x - 1/(2x) - sum B_2k / (2k x^2k)
  const double z = 1.0 / (x * x);
  const double series =
      z * (1.0 / 12 -
           z * (1.0 / 120 -
                z * (1.0 / 252 -
                     z * (1.0 / 240 - z * (1.0 / 132 - z * (691.0 / 32760 - z * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double acc = 0.0;
  while (x < kShift) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  // 1/x + 1/(2x^2) + sum B_2k / x^(2k+1)
  const double z = 1.0 / (x * x);
  const double series =
      z * (1.0 / 6 -
           z * (1.0 / 30 -
                z * (1.0 / 42 - z * (1.0 / 30 - z * (5.0 / 66 - z * (691.0 / 2730 - z * (7.0 / 6)))))));
  return acc + 1.0 / x + 0.5 * z + series / x;
}

}  // namespace pascube::special
