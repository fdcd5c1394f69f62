#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <future>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "stackopt/errors.hpp"
#include "stackopt/evo.hpp"
#include "stackopt/io.hpp"
#include "stackopt/labor_model.hpp"
#include "stackopt/metrics.hpp"
#include "stackopt/sweep.hpp"

namespace stackopt::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

  struct Options {
    std::string config;
    std::string format = "table";
    std::string out;
    std::optional<std::uint64_t> seed;
    int runs = 1;

    PhaseMap<std::optional<double>> fractions{};
    std::optional<double> scalar_fraction;
    std::optional<int> team_size;

    std::vector<double> beta_grid;
    std::vector<double> alpha_grid;
    std::string mode;

    std::string front_path;
    std::vector<double> ref;
    std::optional<double> c_base;
  };

  ResolvedConfig resolve(Options const& opt) {
    return opt.config.empty() ? default_scenario() : load_scenario(opt.config);
  }

  bool any_fraction(Options const& opt) {
    for (auto const& f : opt.fractions) {
      if (f) {
        return true;
      }
    }
    return false;
  }

  AutomationVector vector_from(Options const& opt) {
    AutomationVector v;
    for (auto p : kPhases) {
      if (opt.fractions[p]) {
        v.set(p, *opt.fractions[p]);
      }
    }
    return v;
  }

  std::uint64_t pick_seed(Options const& opt,
                          ResolvedConfig const& config,
                          std::ostream& err) {
    if (opt.seed) {
      return *opt.seed;
    }
    if (config.seed_specified) {
      return config.optimizer.seed;
    }
    std::random_device entropy;
    auto seed = (static_cast<std::uint64_t>(entropy()) << 32) | entropy();
    fmt::print(err, "seed: {}\n", seed);
    return seed;
  }

  fs::path require_out(Options const& opt) {
    if (opt.out.empty()) {
      throw ValidationError{"--out", "an output directory is required"};
    }
    fs::path dir{opt.out};
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw IoError{"cannot create " + dir.string() + ": " + ec.message()};
    }
    return dir;
  }

  void print_tipping_table(std::ostream& out, TippingReport const& t) {
    fmt::print(out, "{:<24}{:>14.4f}\n", "fte_absorbed", t.fte_absorbed);
    fmt::print(out, "{:<24}{:>14}\n", "tipping_reached",
               t.tipping_reached ? "yes" : "no");
    fmt::print(out, "{:<24}{:>14}\n", "max_safe_reduction",
               t.max_safe_reduction);
    fmt::print(out, "{:<24}{:>14}\n", "stable_reduction", t.stable_reduction);
    fmt::print(out, "{:<24}{:>14.2f}\n", "per_person_load_after",
               t.per_person_load_after);
  }

  int cmd_evaluate(Options const& opt, std::ostream& out) {
    auto config = resolve(opt);
    auto const& params = config.params;
    auto f = vector_from(opt);
    auto breakdown = collapsed_labor(params, f);
    auto report = tipping(params, breakdown);

    std::optional<double> quality;
    try {
      quality = quality_ratio(breakdown);
    }
    catch (DegenerateDenominator const&) {
    }

    if (opt.format == "json") {
      json doc{
          {"automation", f},
          {"breakdown", breakdown},
          {"quality_ratio", quality ? json(*quality) : json(nullptr)},
          {"tipping", report},
          {"feasible_capacity",
           feasible_capacity(params, breakdown, params.team_size)},
      };
      out << doc.dump(2) << '\n';
      return kSuccess;
    }

    fmt::print(out, "{:<14}{:>12}{:>12}{:>12}\n", "phase", "f", "human",
               "oversight");
    for (auto p : kPhases) {
      fmt::print(out, "{:<14}{:>12.3f}{:>12.2f}{:>12.2f}\n", name_of(p), f[p],
                 breakdown.human_hours[p], breakdown.oversight_hours[p]);
    }
    fmt::print(out, "\n{:<24}{:>14.2f}\n", "coord_hours_residual",
               breakdown.coord_hours_residual);
    fmt::print(out, "{:<24}{:>14.2f}\n", "total_hours", breakdown.total_hours);
    fmt::print(out, "{:<24}{:>14.2f}\n", "cost", breakdown.cost);
    fmt::print(out, "{:<24}{:>14.2f}\n", "labor_saved", breakdown.labor_saved);
    fmt::print(out, "{:<24}{:>14.4f}\n", "automation_fraction",
               breakdown.automation_fraction);
    if (quality) {
      fmt::print(out, "{:<24}{:>14.4f}\n", "quality_ratio", *quality);
    }
    else {
      fmt::print(out, "{:<24}{:>14}\n", "quality_ratio", "undefined");
    }
    print_tipping_table(out, report);
    return kSuccess;
  }

  int cmd_tipping(Options const& opt, std::ostream& out) {
    auto has_vector = any_fraction(opt);
    if (has_vector && opt.scalar_fraction) {
      throw ValidationError{"--fraction",
                            "cannot be combined with per-phase fractions"};
    }
    if (!has_vector && !opt.scalar_fraction) {
      throw ValidationError{"--fraction",
                            "supply --fraction or per-phase fractions"};
    }

    auto config = resolve(opt);
    auto params = config.params;
    if (opt.team_size) {
      params.team_size = *opt.team_size;
      params.validate();
    }

    auto report =
        opt.scalar_fraction
            ? tipping_for_fraction(*opt.scalar_fraction, params.team_size,
                                   effective_base(params))
            : tipping(params, collapsed_labor(params, vector_from(opt)));

    if (opt.format == "json") {
      out << json(report).dump(2) << '\n';
    }
    else {
      print_tipping_table(out, report);
    }
    return kSuccess;
  }

  int cmd_optimize(Options const& opt, std::ostream& out, std::ostream& err) {
    if (opt.runs < 1) {
      throw ValidationError{"--runs", "must be >= 1"};
    }
    auto config = resolve(opt);
    auto dir = require_out(opt);
    auto first_seed = pick_seed(opt, config, err);

    std::vector<std::future<RunReport>> pending;
    for (auto k = 0; k < opt.runs; ++k) {
      auto run_config = config.optimizer;
      run_config.seed = first_seed + static_cast<std::uint64_t>(k);
      pending.push_back(std::async(std::launch::async, [&config, run_config] {
        auto start = std::chrono::steady_clock::now();
        auto result = run(config.params, run_config);
        std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        return make_run_report(result, config.params, config.digest,
                               elapsed.count());
      }));
    }

    std::vector<RunReport> reports;
    for (auto& f : pending) {
      reports.push_back(f.get());
    }

    std::vector<fs::path> written;
    try {
      for (std::size_t k = 0; k < reports.size(); ++k) {
        auto run_path = dir / fmt::format("run_{}.json", k);
        write_file(run_path, json(reports[k]).dump(2) + "\n");
        written.push_back(run_path);

        auto front_path = dir / fmt::format("front_{}.csv", k);
        write_file(front_path, front_csv(reports[k].front));
        written.push_back(front_path);
      }
      auto summary = summarize_runs(reports, config.params);
      auto summary_path = dir / "summary.json";
      write_file(summary_path, json(summary).dump(2) + "\n");
      written.push_back(summary_path);

      if (opt.format == "json") {
        out << json(summary).dump(2) << '\n';
      }
      else {
        fmt::print(out, "{} run(s), seeds {}..{}\n", reports.size(),
                   first_seed, first_seed + reports.size() - 1);
        fmt::print(out, "{:<24}{:>14.2f} +/- {:.2f}\n", "best cost",
                   summary.best_cost.mean, summary.best_cost.std);
        fmt::print(out, "{:<24}{:>14.4f} +/- {:.4f}\n", "hypervolume",
                   summary.hypervolume.mean, summary.hypervolume.std);
        fmt::print(out, "{:<24}{:>14.2f} +/- {:.2f}\n", "team size",
                   summary.team_size.mean, summary.team_size.std);
        fmt::print(out, "{:<24}{:>14.2f}\n", "naive heuristic cost",
                   summary.heuristic.naive_linear_cost);
        fmt::print(out, "{:<24}{:>13.1f}%\n", "gain vs naive",
                   100.0 * summary.heuristic.ec_gain_vs_naive);
      }
    }
    catch (...) {
      for (auto const& path : written) {
        std::error_code ec;
        fs::remove(path, ec);
      }
      throw;
    }
    return kSuccess;
  }

  int cmd_sweep(Options const& opt, std::ostream& out, std::ostream& err) {
    auto config = resolve(opt);
    auto spec = config.sweep.value_or(SweepSpec{});
    if (!opt.beta_grid.empty()) {
      spec.beta_grid = opt.beta_grid;
    }
    if (!opt.alpha_grid.empty()) {
      spec.alpha_grid = opt.alpha_grid;
    }
    if (!opt.mode.empty()) {
      spec.mode = opt.mode == "reoptimize" ? SweepMode::reoptimize
                                           : SweepMode::fixed_vector;
    }
    if (any_fraction(opt)) {
      spec.vector = vector_from(opt);
    }
    if (spec.mode == SweepMode::reoptimize) {
      spec.optimizer = config.optimizer;
      if (opt.seed || spec.seeds.empty()) {
        auto first = pick_seed(opt, config, err);
        spec.seeds.clear();
        for (auto k = 0; k < opt.runs; ++k) {
          spec.seeds.push_back(first + static_cast<std::uint64_t>(k));
        }
      }
    }

    auto dir = require_out(opt);
    auto cells = run_sweep(config.params, spec);
    write_file(dir / "sweep.csv", sweep_csv(cells));
    fmt::print(out, "wrote {} cells to {}\n", cells.size(),
               (dir / "sweep.csv").string());
    return kSuccess;
  }

  int cmd_hv(Options const& opt, std::ostream& out) {
    NormalizedPoint ref = kDefaultHvReference;
    if (!opt.ref.empty()) {
      if (opt.ref.size() != 2) {
        throw ValidationError{"--ref", "expected two values u,v"};
      }
      ref = {opt.ref[0], opt.ref[1]};
    }
    auto c_base = opt.c_base ? *opt.c_base : baseline_cost(resolve(opt).params);

    auto points = read_front_csv(read_file(opt.front_path));
    auto hv = hypervolume_2d(normalize_front(points, c_base), ref);
    if (opt.format == "json") {
      out << json{{"hv", hv}, {"points", points.size()}}.dump() << '\n';
    }
    else {
      out << format_number(hv) << '\n';
    }
    return kSuccess;
  }

  void add_fraction_flags(CLI::App& cmd, Options& opt) {
    for (auto p : kPhases) {
      auto flag = fmt::format("--f-{}", key_of(p));
      cmd.add_option(flag, opt.fractions[p],
                     fmt::format("Automation fraction for {}", name_of(p)))
          ->check(CLI::Range(0.0, 1.0));
    }
  }

} // namespace

int run(std::span<std::string const> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint AI-automation and headcount optimizer for SDLC teams",
               "stackopt"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config, "Scenario JSON file");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", opt.out, "Output directory");
  app.add_option("--seed", opt.seed, "Seed of the first run");
  app.add_option("--runs", opt.runs, "Number of independent runs");

  auto* evaluate =
      app.add_subcommand("evaluate", "Labor breakdown for one automation vector");
  add_fraction_flags(*evaluate, opt);

  auto* optimize =
      app.add_subcommand("optimize", "Run NSGA-II and write run artifacts");

  auto* tip = app.add_subcommand("tipping", "Safe headcount reduction");
  add_fraction_flags(*tip, opt);
  tip->add_option("--fraction", opt.scalar_fraction,
                  "Effective automation fraction (skips the labor model)")
      ->check(CLI::Range(0.0, 1.0));
  tip->add_option("--team-size", opt.team_size, "Override the baseline team size");

  auto* sweep = app.add_subcommand("sweep", "Oversight/coordination sensitivity grid");
  add_fraction_flags(*sweep, opt);
  sweep->add_option("--beta-grid", opt.beta_grid, "Oversight factor values")
      ->delimiter(',');
  sweep->add_option("--alpha-grid", opt.alpha_grid, "Coordination retention values")
      ->delimiter(',');
  sweep->add_option("--mode", opt.mode, "fixed_vector or reoptimize")
      ->check(CLI::IsMember({"fixed_vector", "reoptimize"}));

  auto* hv = app.add_subcommand("hv", "Normalized hypervolume of a front CSV");
  hv->add_option("front", opt.front_path, "Front CSV")->required();
  hv->add_option("--ref", opt.ref, "Reference point u,v")->delimiter(',');
  hv->add_option("--c-base", opt.c_base, "Cost normalization base");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (CLI::ParseError const& e) {
    auto code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (evaluate->parsed()) {
      return cmd_evaluate(opt, out);
    }
    if (optimize->parsed()) {
      return cmd_optimize(opt, out, err);
    }
    if (tip->parsed()) {
      return cmd_tipping(opt, out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(opt, out, err);
    }
    return cmd_hv(opt, out);
  }
  catch (InputError const& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kInputError;
  }
  catch (std::exception const& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kRuntimeError;
  }
}

} // namespace stackopt::cli
