#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pascube/extbinom.hpp"
#include "pascube/heat.hpp"
#include "pascube/io.hpp"
#include "pascube/pyramid.hpp"
#include "pascube/walk.hpp"

namespace py = pybind11;
using namespace pascube;

namespace {

// Big values cross the boundary as Python ints / Fractions via their decimal
// strings, so no precision is lost.
py::int_ to_py(const BigCount& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const ExactProb& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

Route parse_route(const std::string& name) {
  if (name == "rec" || name == "recurrence") return Route::recurrence;
  if (name == "closed") return Route::closed;
  if (name == "conv" || name == "convolution") return Route::convolution;
  throw py::value_error("route must be one of rec, closed, conv");
}

py::dict record_to_dict(const DerivativeRecord& r) {
  py::dict d;
  d["x_prime"] = r.x_prime;
  d["t"] = r.t;
  d["method"] = r.method == DerivativeMethod::digamma ? "digamma" : "finite-difference";
  d["P"] = r.P;
  d["dPdt"] = r.dPdt;
  d["dPdx"] = r.dPdx;
  d["d2Pdx2"] = r.d2Pdx2;
  return d;
}

}  // namespace

PYBIND11_MODULE(pascube, m) {
  m.doc() = "Extended binomial coefficients, Pascal's pyramid and the layer random walk";

  m.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(binomial(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def(
      "ext_binom",
      [](std::int64_t a, std::int64_t b, std::int64_t c, const std::string& route) {
        return to_py(ext_binom({a, b, c}, parse_route(route)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("route") = "rec",
      "Extended binomial coefficient C(a, b; c) by the chosen route.");

  m.def(
      "symmetry_pair",
      [](std::int64_t a, std::int64_t b, std::int64_t c) {
        const CoeffIndex out = symmetry_pair({a, b, c});
        return py::make_tuple(out.a, out.b, out.c);
      },
      py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "build_layer",
      [](std::int64_t n) {
        const LayerGrid layer = build_layer(n);
        py::list rows;
        for (const auto& row : layer.rows()) {
          py::list out;
          for (const auto& v : row) out.append(to_py(v));
          rows.append(out);
        }
        return rows;
      },
      py::arg("n"), "Layer n of Pascal's pyramid as a list of rows (layer 1 is the apex).");

  m.def("layer_sum", [](std::int64_t n) { return to_py(layer_sum(n)); }, py::arg("n"));

  m.def(
      "layer_to_cube",
      [](std::int64_t n) {
        py::dict out;
        for (const auto& [pos, c] : layer_to_cube(n))
          out[py::make_tuple(pos.r, pos.k)] = py::make_tuple(c.x, c.y, c.z);
        return out;
      },
      py::arg("n"));

  m.def(
      "coeff_at_cube",
      [](std::int64_t x, std::int64_t y, std::int64_t z) { return to_py(coeff_at_cube({x, y, z})); },
      py::arg("x"), py::arg("y"), py::arg("z"));

  m.def(
      "layer_json",
      [](std::int64_t n, bool with_cube) { return io::layer_to_json(build_layer(n), with_cube).dump(); },
      py::arg("n"), py::arg("with_cube") = false);

  m.def(
      "prob_xy", [](std::int64_t x, std::int64_t y, std::int64_t t) { return to_py(prob_xy({x, y, t})); },
      py::arg("x"), py::arg("y"), py::arg("t"));

  m.def(
      "prob_slice", [](std::int64_t x_prime, std::int64_t t) { return to_py(prob_slice(x_prime, t)); },
      py::arg("x_prime"), py::arg("t"));

  m.def(
      "exact_distribution",
      [](std::int64_t t) {
        py::dict out;
        for (const auto& [p, q] : exact_distribution(t).mass) out[py::make_tuple(p.x, p.y)] = to_py(q);
        return out;
      },
      py::arg("t"), "Map (x, y) -> Fraction over layer 3t+1.");

  m.def(
      "simulate",
      [](std::int64_t t, std::uint64_t num_walks, std::uint64_t seed, unsigned threads) {
        EmpiricalDistribution emp;
        {
          py::gil_scoped_release release;
          emp = simulate({t, num_walks, seed}, threads);
        }
        py::dict out;
        for (const auto& [p, count] : emp.counts) out[py::make_tuple(p.x, p.y)] = count;
        return out;
      },
      py::arg("t"), py::arg("num_walks"), py::arg("seed") = 0, py::arg("threads") = 0,
      "Monte Carlo hit counts keyed by (x, y).");

  m.def(
      "tv_distance",
      [](std::int64_t t, std::uint64_t num_walks, std::uint64_t seed) {
        const auto emp = simulate({t, num_walks, seed});
        return to_py(tv_distance(emp, exact_distribution(t)));
      },
      py::arg("t"), py::arg("num_walks"), py::arg("seed") = 0,
      "Exact total-variation distance between a seeded simulation and the exact law.");

  m.def("p_continuous", &p_continuous, py::arg("x_prime"), py::arg("t"));
  m.def(
      "derivatives_digamma", [](double x, double t) { return record_to_dict(derivatives_digamma(x, t)); },
      py::arg("x_prime"), py::arg("t"));
  m.def(
      "derivatives_fd",
      [](std::int64_t x, std::int64_t t) { return record_to_dict(derivatives_fd(x, t)); },
      py::arg("x_prime"), py::arg("t"));

  m.def(
      "residual_sweep",
      [](std::vector<std::int64_t> t_values, std::int64_t x_window) {
        const ResidualReport report = residual_sweep(std::move(t_values), x_window);
        py::list rows;
        for (const auto& row : report.rows) {
          py::dict d;
          d["t"] = row.t;
          d["x_prime"] = row.x_prime;
          d["fd"] = record_to_dict(row.fd);
          d["digamma"] = record_to_dict(row.dg);
          d["relative_residual_fd"] = relative_residual(row.fd);
          d["relative_residual_digamma"] = relative_residual(row.dg);
          rows.append(d);
        }
        py::list summaries;
        for (const auto& s : report.summaries) {
          py::dict d;
          d["t"] = s.t;
          d["fitted_D"] = s.fitted_D;
          d["fitted_D_fd"] = s.fitted_D_fd;
          d["max_rel_residual"] = s.max_rel_residual;
          d["max_rel_residual_fd"] = s.max_rel_residual_fd;
          summaries.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["summaries"] = summaries;
        out["mode_residual_decreasing"] =
            mode_residual_decreasing(report, DerivativeMethod::digamma) &&
            mode_residual_decreasing(report, DerivativeMethod::finite_difference);
        return out;
      },
      py::arg("t_values"), py::arg("x_window") = 1);
}
