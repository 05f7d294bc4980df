#pragma once

namespace pascube::special {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// psi(x) = d/dx ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double digamma(double x);

/// psi'(x) for x > 0. Throws std::domain_error otherwise.
double trigamma(double x);

}  // namespace pascube::special
