#include "pascube/cli.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "pascube/extbinom.hpp"
#include "pascube/heat.hpp"
#include "pascube/io.hpp"
#include "pascube/pyramid.hpp"
#include "pascube/verify.hpp"
#include "pascube/walk.hpp"

namespace pascube::cli {

namespace {

enum class Format { pretty, csv, json };

struct GlobalOptions {
  Format format = Format::pretty;
  std::string output;
  std::uint64_t seed = 0;
};

/// Thrown for argument combinations CLI11 cannot express as validators.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::map<std::string, Format> kFormats{
    {"pretty", Format::pretty}, {"csv", Format::csv}, {"json", Format::json}};

// ---------------------------------------------------------------------------
// coeff

struct CoeffOptions {
  std::int64_t a = 0, b = 0, c = 0;
  std::string route = "rec";
};

int cmd_coeff(const CoeffOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const CoeffIndex idx{opt.a, opt.b, opt.c};
  std::vector<std::pair<std::string, std::optional<BigCount>>> values;
  auto add = [&](const std::string& name, Route route) {
    if (route == Route::convolution && idx.c == 0) {
      if (opt.route == "conv") throw UsageError("--route conv needs -c >= 1");
      values.emplace_back(name, std::nullopt);
      return;
    }
    values.emplace_back(name, ext_binom(idx, route));
  };
  if (opt.route == "rec" || opt.route == "all") add("rec", Route::recurrence);
  if (opt.route == "closed" || opt.route == "all") add("closed", Route::closed);
  if (opt.route == "conv" || opt.route == "all") add("conv", Route::convolution);

  bool match = true;
  const BigCount* first = nullptr;
  for (const auto& [name, v] : values) {
    if (!v) continue;
    if (first && *v != *first) match = false;
    if (!first) first = &*v;
  }
  const bool show_verdict = opt.route == "all";

  switch (g.format) {
    case Format::pretty:
      for (const auto& [name, v] : values) out << (v ? v->get_str() : "n/a") << '\n';
      if (show_verdict) out << (match ? "match" : "mismatch") << '\n';
      break;
    case Format::csv:
      out << "a,b,c,route,value\n";
      for (const auto& [name, v] : values)
        if (v) out << idx.a << ',' << idx.b << ',' << idx.c << ',' << name << ',' << v->get_str() << '\n';
      break;
    case Format::json: {
      nlohmann::json doc{{"a", idx.a}, {"b", idx.b}, {"c", idx.c}};
      nlohmann::json vals = nlohmann::json::object();
      for (const auto& [name, v] : values) vals[name] = v ? nlohmann::json(v->get_str()) : nlohmann::json();
      doc["values"] = std::move(vals);
      if (show_verdict) doc["verdict"] = match ? "match" : "mismatch";
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return match ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// layer

struct LayerOptions {
  std::int64_t n = 1;
  std::string target = "pyramid";
};

int cmd_layer(const LayerOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const LayerGrid layer = build_layer(opt.n);
  const bool cube = opt.target == "cube-slice";
  switch (g.format) {
    case Format::pretty:
      for (std::int64_t r = 0; r < layer.layer_number(); ++r) {
        for (std::int64_t k = 0; k <= r; ++k) {
          if (k) out << ' ';
          out << layer.entry(r, k).get_str();
          if (cube) {
            const CubeCoord c = layer_position_to_cube(opt.n, {r, k});
            out << "@(" << c.x << ',' << c.y << ',' << c.z << ')';
          }
        }
        out << '\n';
      }
      out << "sum " << layer.sum().get_str() << '\n';
      out << "sum_is_power_of_three " << (io::sum_is_power_of_three(layer) ? "true" : "false") << '\n';
      break;
    case Format::csv:
      io::write_layer_csv(out, layer);
      break;
    case Format::json:
      out << io::layer_to_json(layer, cube).dump() << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite = "all";
  std::int64_t a_max = 15;
  std::int64_t c_max = 15;
  std::int64_t n_max = 25;
};

int cmd_verify(const VerifyOptions& opt, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  std::vector<SweepResult> results;
  const bool all = opt.suite == "all";
  if (all || opt.suite == "routes") results.push_back(verify_routes(opt.a_max, opt.c_max));
  if (all || opt.suite == "symmetry") results.push_back(verify_symmetry(opt.a_max, opt.c_max));
  if (all || opt.suite == "convolution") results.push_back(verify_convolution(opt.a_max, opt.c_max));
  if (all || opt.suite == "layersum") results.push_back(verify_layers(opt.n_max));

  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok();
    for (const auto& f : r.failures) err << r.suite << " failure " << f << '\n';
  }

  switch (g.format) {
    case Format::pretty:
      for (const auto& r : results)
        out << r.suite << ": checked " << r.checked << ", failed " << r.failed << '\n';
      break;
    case Format::csv:
      out << "suite,checked,failed\n";
      for (const auto& r : results) out << r.suite << ',' << r.checked << ',' << r.failed << '\n';
      break;
    case Format::json: {
      nlohmann::json suites = nlohmann::json::array();
      for (const auto& r : results)
        suites.push_back({{"suite", r.suite}, {"checked", r.checked}, {"failed", r.failed}});
      out << nlohmann::json{{"suites", std::move(suites)}, {"ok", ok}}.dump(2) << '\n';
      break;
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// walk

struct WalkOptions {
  std::int64_t t = 0;
  std::string emit = "exact";
  std::uint64_t num_walks = 100000;
  unsigned threads = 0;
};

int cmd_walk(const WalkOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const bool want_exact = opt.emit != "empirical";
  const bool want_empirical = opt.emit != "exact";

  std::optional<ExactDistribution> exact;
  std::optional<EmpiricalDistribution> empirical;
  if (want_exact || want_empirical) exact = exact_distribution(opt.t);
  if (want_empirical) empirical = simulate({opt.t, opt.num_walks, g.seed}, opt.threads);
  std::optional<ExactProb> tv;
  if (want_exact && want_empirical) tv = tv_distance(*empirical, *exact);

  switch (g.format) {
    case Format::pretty:
    case Format::csv:
      if (want_exact && want_empirical)
        io::write_joint_csv(out, *exact, *empirical);
      else if (want_exact)
        io::write_exact_csv(out, *exact);
      else
        io::write_empirical_csv(out, *empirical);
      if (tv && g.format == Format::pretty) out << "tv_distance " << io::format_double(tv->get_d()) << '\n';
      break;
    case Format::json: {
      nlohmann::json doc{{"t", opt.t}};
      if (want_exact) doc["exact"] = io::exact_to_json(*exact)["points"];
      if (want_empirical) {
        doc["empirical"] = io::empirical_to_json(*empirical)["points"];
        doc["N"] = empirical->total;
        doc["seed"] = g.seed;
      }
      if (tv) doc["tv_distance"] = tv->get_d();
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// heat

struct HeatOptions {
  std::vector<std::int64_t> t_values;
  std::int64_t window = 1;
};

int cmd_heat(const HeatOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const ResidualReport report = residual_sweep(opt.t_values, opt.window);
  const bool decreasing_dg = mode_residual_decreasing(report, DerivativeMethod::digamma);
  const bool decreasing_fd = mode_residual_decreasing(report, DerivativeMethod::finite_difference);

  switch (g.format) {
    case Format::pretty:
      io::write_residual_csv(out, report);
      out << '\n' << io::residual_summary_json(report).dump(2) << '\n';
      break;
    case Format::csv:
      io::write_residual_csv(out, report);
      break;
    case Format::json:
      out << nlohmann::json{{"rows", io::residual_rows_json(report)},
                            {"summary", io::residual_summary_json(report)},
                            {"mode_residual_decreasing",
                             {{"digamma", decreasing_dg}, {"finite_difference", decreasing_fd}}}}
                 .dump(2)
          << '\n';
      break;
  }
  return decreasing_dg && decreasing_fd ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended binomial coefficients, Pascal's pyramid and the layer random walk", "pascube"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  GlobalOptions global;
  std::string format = "pretty";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "csv", "json"}));
  app.add_option("--output", global.output, "Write output to this file instead of stdout");
  app.add_option("--seed", global.seed, "Seed for the Monte Carlo walk");

  CoeffOptions coeff;
  auto* coeff_cmd = app.add_subcommand("coeff", "Evaluate the extended binomial coefficient C(a, b; c)");
  coeff_cmd->add_option("-a", coeff.a, "Superscript")->required()->check(CLI::NonNegativeNumber);
  coeff_cmd->add_option("-b", coeff.b, "Subscript")->required()->check(CLI::NonNegativeNumber);
  coeff_cmd->add_option("-c", coeff.c, "Layer")->required()->check(CLI::NonNegativeNumber);
  coeff_cmd->add_option("--route", coeff.route, "Evaluation route")
      ->check(CLI::IsMember({"rec", "closed", "conv", "all"}));

  LayerOptions layer;
  auto* layer_cmd = app.add_subcommand("layer", "Dump one layer of Pascal's pyramid");
  layer_cmd->add_option("-n", layer.n, "Layer number (1 = apex)")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  layer_cmd->add_option("--target", layer.target, "pyramid or cube-slice")
      ->check(CLI::IsMember({"pyramid", "cube-slice"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity sweeps");
  verify_cmd->add_option("--suite", verify.suite, "Which sweep")
      ->check(CLI::IsMember({"routes", "symmetry", "layersum", "convolution", "all"}));
  verify_cmd->add_option("--a-max", verify.a_max, "Largest superscript")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--c-max", verify.c_max, "Largest layer")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("-n", verify.n_max, "Largest pyramid layer for the layersum suite")
      ->check(CLI::NonNegativeNumber);

  WalkOptions walk;
  auto* walk_cmd = app.add_subcommand("walk", "Exact and simulated distribution on layer 3t+1");
  walk_cmd->add_option("-t", walk.t, "Time step")->required()->check(CLI::NonNegativeNumber);
  walk_cmd->add_option("--emit", walk.emit, "exact, empirical or both")
      ->check(CLI::IsMember({"exact", "empirical", "both"}));
  walk_cmd->add_option("-N,--num-walks", walk.num_walks, "Number of simulated walks")
      ->check(CLI::Range(std::uint64_t{1}, static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())));
  walk_cmd->add_option("--threads", walk.threads, "Worker threads (0 = all cores); does not change results");

  HeatOptions heat;
  auto* heat_cmd = app.add_subcommand("heat", "Heat-equation residuals of the middle-row slice");
  heat_cmd->add_option("--t", heat.t_values, "Comma-separated time steps")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
  heat_cmd->add_option("--window", heat.window, "Half-width of the x' window")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  global.format = kFormats.at(format);

  std::ofstream file;
  if (!global.output.empty()) {
    file.open(global.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << global.output << " for writing\n";
      return kExitInternal;
    }
  }
  std::ostream& sink = global.output.empty() ? out : file;

  try {
    if (*coeff_cmd) return cmd_coeff(coeff, global, sink);
    if (*layer_cmd) return cmd_layer(layer, global, sink);
    if (*verify_cmd) return cmd_verify(verify, global, sink, err);
    if (*walk_cmd) return cmd_walk(walk, global, sink);
    if (*heat_cmd) return cmd_heat(heat, global, sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace pascube::cli
