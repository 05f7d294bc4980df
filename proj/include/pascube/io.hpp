#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "pascube/heat.hpp"
#include "pascube/pyramid.hpp"
#include "pascube/walk.hpp"

namespace pascube::io {

/// Shortest decimal string that round-trips the double.
std::string format_double(double v);

/// True when sum(layer) == 3^(n-1).
bool sum_is_power_of_three(const LayerGrid& layer);

// Layer export. JSON: {"n", "rows": [[decimal string, ...], ...], "sum",
// "sum_is_power_of_three"} plus "cube": [[[x, y, z], ...], ...] when
// with_cube is set. CSV columns: r,k,x,y,z,value.
nlohmann::json layer_to_json(const LayerGrid& layer, bool with_cube = false);
LayerGrid layer_from_json(const nlohmann::json& doc);
void write_layer_csv(std::ostream& os, const LayerGrid& layer);

// Distribution export. Exact CSV columns: x,y,t,numerator,denominator,
// float_value. Empirical CSV: x,y,t,count,N. Joint CSV: exact columns then
// count,N over the union of supports.
void write_exact_csv(std::ostream& os, const ExactDistribution& dist);
void write_empirical_csv(std::ostream& os, const EmpiricalDistribution& dist);
void write_joint_csv(std::ostream& os, const ExactDistribution& exact,
                     const EmpiricalDistribution& empirical);
nlohmann::json exact_to_json(const ExactDistribution& dist);
nlohmann::json empirical_to_json(const EmpiricalDistribution& dist);

// Heat report export. CSV columns: t,x_prime,P,dPdt_fd,dPdt_dg,d2Pdx2_fd,
// d2Pdx2_dg,residual,relative_residual (residuals from the digamma method).
// Summary JSON: [{"t", "fitted_D", "max_rel_residual"}, ...].
void write_residual_csv(std::ostream& os, const ResidualReport& report);
nlohmann::json residual_summary_json(const ResidualReport& report);
nlohmann::json residual_rows_json(const ResidualReport& report);

}  // namespace pascube::io
