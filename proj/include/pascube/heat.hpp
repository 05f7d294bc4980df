#pragma once

#include <cstdint>
#include <vector>

namespace pascube {

enum class DerivativeMethod { finite_difference, digamma };

/// Time and space derivatives of the middle-row slice P(x', t) at one point.
struct DerivativeRecord {
  double x_prime = 0.0;
  double t = 0.0;
  DerivativeMethod method = DerivativeMethod::digamma;
  double P = 0.0;
  double dPdt = 0.0;
  double dPdx = 0.0;
  double d2Pdx2 = 0.0;
};

/// Floor on the denominator of the relative residual.
inline constexpr double kResidualFloor = 1e-300;

/// Gamma-function extension of the slice,
///   Gamma(3t+1) / (Gamma(t+x'+1) Gamma(t+1) Gamma(t-x'+1) 3^(3t)),
/// evaluated in log space. Throws std::domain_error unless t > 0 and
/// |x'| < t + 1.
double p_continuous(double x_prime, double t);

/// Analytic derivatives of p_continuous through digamma / trigamma.
DerivativeRecord derivatives_digamma(double x_prime, double t);

/// Unit-step central differences on the exact lattice values. Throws
/// std::invalid_argument unless t >= 2 and |x'| <= t - 1.
DerivativeRecord derivatives_fd(std::int64_t x_prime, std::int64_t t);

/// dPdt - d2Pdx2 / 2.
double heat_residual(const DerivativeRecord& rec);
double relative_residual(const DerivativeRecord& rec);

struct ResidualRow {
  std::int64_t t = 0;
  std::int64_t x_prime = 0;
  DerivativeRecord fd;
  DerivativeRecord dg;
};

struct ResidualSummary {
  std::int64_t t = 0;
  /// Least-squares slope through the origin of dPdt against d2Pdx2.
  double fitted_D = 0.0;
  double fitted_D_fd = 0.0;
  double max_rel_residual = 0.0;
  double max_rel_residual_fd = 0.0;
};

/// Rows sorted by t then x'; one summary per distinct t.
struct ResidualReport {
  std::vector<ResidualRow> rows;
  std::vector<ResidualSummary> summaries;
};

/// Evaluates both derivative methods for every t (sorted, deduplicated) and
/// |x'| <= x_window. Throws std::invalid_argument if t_values is empty, any
/// t < 2, x_window < 0 or x_window > min(t) - 1.
ResidualReport residual_sweep(std::vector<std::int64_t> t_values, std::int64_t x_window);

/// True when the relative residual at x' = 0 strictly decreases with t for
/// the given method. Reports with a single t are trivially decreasing.
bool mode_residual_decreasing(const ResidualReport& report, DerivativeMethod method);

}  // namespace pascube
