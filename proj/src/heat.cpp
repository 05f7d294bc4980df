#include "pascube/heat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pascube/special.hpp"
#include "pascube/walk.hpp"

namespace pascube {

namespace {

const double kLn3 = std::log(3.0);

void require_continuous_domain(double x_prime, double t) {
  if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(x_prime) ||
      !(std::abs(x_prime) < t + 1.0))
    throw std::domain_error("continuous slice needs t > 0 and |x'| < t + 1, got x'=" +
                            std::to_string(x_prime) + " t=" + std::to_string(t));
}

}  // namespace

double p_continuous(double x_prime, double t) {
  require_continuous_domain(x_prime, t);
  const double log_p = std::lgamma(3.0 * t + 1.0) - std::lgamma(t + x_prime + 1.0) -
                       std::lgamma(t + 1.0) - std::lgamma(t - x_prime + 1.0) - 3.0 * t * kLn3;
  return std::exp(log_p);
}

DerivativeRecord derivatives_digamma(double x_prime, double t) {
  using special::digamma;
  using special::trigamma;
  require_continuous_domain(x_prime, t);

  DerivativeRecord rec;
  rec.x_prime = x_prime;
  rec.t = t;
  rec.method = DerivativeMethod::digamma;
  rec.P = p_continuous(x_prime, t);

  const double psi_plus = digamma(t + x_prime + 1.0);
  const double psi_minus = digamma(t - x_prime + 1.0);
  const double gradient = psi_minus - psi_plus;
  rec.dPdt = rec.P * (3.0 * digamma(3.0 * t + 1.0) - psi_plus - digamma(t + 1.0) - psi_minus -
                      3.0 * kLn3);
  rec.dPdx = rec.P * gradient;
  rec.d2Pdx2 = rec.P * (gradient * gradient - trigamma(t + x_prime + 1.0) -
                        trigamma(t - x_prime + 1.0));
  return rec;
}

DerivativeRecord derivatives_fd(std::int64_t x_prime, std::int64_t t) {
  if (t < 2 || x_prime < -(t - 1) || x_prime > t - 1)
    throw std::invalid_argument("finite differences need t >= 2 and |x'| <= t - 1, got x'=" +
                                std::to_string(x_prime) + " t=" + std::to_string(t));

  const ExactProb here = prob_slice(x_prime, t);
  const ExactProb left = prob_slice(x_prime - 1, t);
  const ExactProb right = prob_slice(x_prime + 1, t);
  const ExactProb later = prob_slice(x_prime, t + 1);
  const ExactProb earlier = prob_slice(x_prime, t - 1);

  DerivativeRecord rec;
  rec.x_prime = static_cast<double>(x_prime);
  rec.t = static_cast<double>(t);
  rec.method = DerivativeMethod::finite_difference;
  rec.P = here.get_d();
  rec.dPdt = ExactProb((later - earlier) / 2).get_d();
  rec.dPdx = ExactProb((right - left) / 2).get_d();
  rec.d2Pdx2 = ExactProb(right - 2 * here + left).get_d();
  return rec;
}

double heat_residual(const DerivativeRecord& rec) { return rec.dPdt - 0.5 * rec.d2Pdx2; }

double relative_residual(const DerivativeRecord& rec) {
  return std::abs(heat_residual(rec)) / std::max(std::abs(rec.dPdt), kResidualFloor);
}

ResidualReport residual_sweep(std::vector<std::int64_t> t_values, std::int64_t x_window) {
  if (t_values.empty()) throw std::invalid_argument("residual sweep needs at least one t");
  std::sort(t_values.begin(), t_values.end());
  t_values.erase(std::unique(t_values.begin(), t_values.end()), t_values.end());
  if (t_values.front() < 2)
    throw std::invalid_argument("every t must be >= 2, got " + std::to_string(t_values.front()));
  if (x_window < 0 || x_window > t_values.front() - 1)
    throw std::invalid_argument("x_window must lie in [0, min(t) - 1], got " +
                                std::to_string(x_window));

  ResidualReport report;
  for (const std::int64_t t : t_values) {
    ResidualSummary summary{t};
    double dg_num = 0.0, dg_den = 0.0, fd_num = 0.0, fd_den = 0.0;
    for (std::int64_t x = -x_window; x <= x_window; ++x) {
      ResidualRow row{t, x, derivatives_fd(x, t),
                      derivatives_digamma(static_cast<double>(x), static_cast<double>(t))};
      dg_num += row.dg.dPdt * row.dg.d2Pdx2;
      dg_den += row.dg.d2Pdx2 * row.dg.d2Pdx2;
      fd_num += row.fd.dPdt * row.fd.d2Pdx2;
      fd_den += row.fd.d2Pdx2 * row.fd.d2Pdx2;
      summary.max_rel_residual = std::max(summary.max_rel_residual, relative_residual(row.dg));
      summary.max_rel_residual_fd = std::max(summary.max_rel_residual_fd, relative_residual(row.fd));
      report.rows.push_back(row);
    }
    summary.fitted_D = dg_den > 0.0 ? dg_num / dg_den : 0.0;
    summary.fitted_D_fd = fd_den > 0.0 ? fd_num / fd_den : 0.0;
    report.summaries.push_back(summary);
  }
  return report;
}

bool mode_residual_decreasing(const ResidualReport& report, DerivativeMethod method) {
  double previous = 0.0;
  bool first = true;
  for (const auto& row : report.rows) {
    if (row.x_prime != 0) continue;
    const double rel = relative_residual(method == DerivativeMethod::digamma ? row.dg : row.fd);
    if (!first && !(rel < previous)) return false;
    previous = rel;
    first = false;
  }
  return true;
}

}  // namespace pascube
