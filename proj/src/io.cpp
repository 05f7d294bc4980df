#include "pascube/io.hpp"

#include <array>
#include <charconv>
#include <set>
#include <stdexcept>

namespace pascube::io {

namespace {

BigCount pow3(std::int64_t e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return out;
}

void exact_columns(std::ostream& os, const LatticePoint& p, std::int64_t t, const ExactProb& q) {
  os << p.x << ',' << p.y << ',' << t << ',' << q.get_num().get_str() << ','
     << q.get_den().get_str() << ',' << format_double(q.get_d());
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf.data(), end);
}

bool sum_is_power_of_three(const LayerGrid& layer) {
  return layer.sum() == pow3(layer.layer_number() - 1);
}

nlohmann::json layer_to_json(const LayerGrid& layer, bool with_cube) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : layer.rows()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : row) out.push_back(v.get_str());
    rows.push_back(std::move(out));
  }
  nlohmann::json doc{{"n", layer.layer_number()},
                     {"rows", std::move(rows)},
                     {"sum", layer.sum().get_str()},
                     {"sum_is_power_of_three", sum_is_power_of_three(layer)}};
  if (with_cube) {
    nlohmann::json cube = nlohmann::json::array();
    const std::int64_t n = layer.layer_number();
    for (std::int64_t r = 0; r < n; ++r) {
      nlohmann::json out = nlohmann::json::array();
      for (std::int64_t k = 0; k <= r; ++k) {
        const CubeCoord c = layer_position_to_cube(n, {r, k});
        out.push_back({c.x, c.y, c.z});
      }
      cube.push_back(std::move(out));
    }
    doc["cube"] = std::move(cube);
  }
  return doc;
}

LayerGrid layer_from_json(const nlohmann::json& doc) {
  const auto n = doc.at("n").get<std::int64_t>();
  std::vector<std::vector<BigCount>> rows;
  for (const auto& row : doc.at("rows")) {
    std::vector<BigCount> out;
    for (const auto& v : row) {
      BigCount value;
      if (value.set_str(v.get<std::string>(), 10) != 0)
        throw std::invalid_argument("layer entry is not a decimal integer: " + v.dump());
      out.push_back(std::move(value));
    }
    rows.push_back(std::move(out));
  }
  return LayerGrid(n, std::move(rows));
}

void write_layer_csv(std::ostream& os, const LayerGrid& layer) {
  os << "r,k,x,y,z,value\n";
  const std::int64_t n = layer.layer_number();
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t k = 0; k <= r; ++k) {
      const CubeCoord c = layer_position_to_cube(n, {r, k});
      os << r << ',' << k << ',' << c.x << ',' << c.y << ',' << c.z << ','
         << layer.entry(r, k).get_str() << '\n';
    }
  }
}

void write_exact_csv(std::ostream& os, const ExactDistribution& dist) {
  os << "x,y,t,numerator,denominator,float_value\n";
  for (const auto& [p, q] : dist.mass) {
    exact_columns(os, p, dist.t, q);
    os << '\n';
  }
}

void write_empirical_csv(std::ostream& os, const EmpiricalDistribution& dist) {
  os << "x,y,t,count,N\n";
  for (const auto& [p, count] : dist.counts)
    os << p.x << ',' << p.y << ',' << dist.t << ',' << count << ',' << dist.total << '\n';
}

void write_joint_csv(std::ostream& os, const ExactDistribution& exact,
                     const EmpiricalDistribution& empirical) {
  std::set<LatticePoint> support;
  for (const auto& [p, q] : exact.mass) support.insert(p);
  for (const auto& [p, c] : empirical.counts) support.insert(p);

  os << "x,y,t,numerator,denominator,float_value,count,N\n";
  for (const auto& p : support) {
    const auto e = exact.mass.find(p);
    const auto m = empirical.counts.find(p);
    exact_columns(os, p, exact.t, e == exact.mass.end() ? ExactProb{0} : e->second);
    os << ',' << (m == empirical.counts.end() ? 0 : m->second) << ',' << empirical.total << '\n';
  }
}

nlohmann::json exact_to_json(const ExactDistribution& dist) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& [p, q] : dist.mass) {
    points.push_back({{"x", p.x},
                      {"y", p.y},
                      {"numerator", q.get_num().get_str()},
                      {"denominator", q.get_den().get_str()},
                      {"float_value", q.get_d()}});
  }
  return {{"t", dist.t}, {"points", std::move(points)}};
}

nlohmann::json empirical_to_json(const EmpiricalDistribution& dist) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& [p, count] : dist.counts)
    points.push_back({{"x", p.x}, {"y", p.y}, {"count", count}});
  return {{"t", dist.t}, {"N", dist.total}, {"points", std::move(points)}};
}

void write_residual_csv(std::ostream& os, const ResidualReport& report) {
  os << "t,x_prime,P,dPdt_fd,dPdt_dg,d2Pdx2_fd,d2Pdx2_dg,residual,relative_residual\n";
  for (const auto& row : report.rows) {
    os << row.t << ',' << row.x_prime << ',' << format_double(row.fd.P) << ','
       << format_double(row.fd.dPdt) << ',' << format_double(row.dg.dPdt) << ','
       << format_double(row.fd.d2Pdx2) << ',' << format_double(row.dg.d2Pdx2) << ','
       << format_double(heat_residual(row.dg)) << ',' << format_double(relative_residual(row.dg))
       << '\n';
  }
}

nlohmann::json residual_summary_json(const ResidualReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : report.summaries)
    out.push_back({{"t", s.t}, {"fitted_D", s.fitted_D}, {"max_rel_residual", s.max_rel_residual}});
  return out;
}

nlohmann::json residual_rows_json(const ResidualReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : report.rows) {
    out.push_back({{"t", row.t},
                   {"x_prime", row.x_prime},
                   {"P", row.fd.P},
                   {"dPdt_fd", row.fd.dPdt},
                   {"dPdt_dg", row.dg.dPdt},
                   {"d2Pdx2_fd", row.fd.d2Pdx2},
                   {"d2Pdx2_dg", row.dg.d2Pdx2},
                   {"residual", heat_residual(row.dg)},
                   {"relative_residual", relative_residual(row.dg)}});
  }
  return out;
}

}  // namespace pascube::io
