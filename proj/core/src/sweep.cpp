#include "stackopt/sweep.hpp"

#include <string>

#include "stackopt/errors.hpp"

namespace stackopt {

namespace {

  void check_grid(std::vector<double> const& grid, std::string const& field) {
    if (grid.empty()) {
      throw ValidationError{field, "must not be empty"};
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
        throw ValidationError{field, "values must lie in [0, 1]"};
      }
      if (i > 0 && !(grid[i] > grid[i - 1])) {
        throw ValidationError{field, "values must be strictly increasing"};
      }
    }
  }

  SweepCell make_cell(ScenarioParams const& params,
                      AutomationVector const& f) {
    auto breakdown = collapsed_labor(params, f);
    auto report = tipping(params, breakdown);
    return {params.oversight_factor,
            params.coord_retention,
            breakdown.automation_fraction,
            report.max_safe_reduction,
            report.stable_reduction,
            report.per_person_load_after,
            breakdown.cost};
  }

  AutomationVector reoptimized_vector(ScenarioParams const& params,
                                      SweepSpec const& spec) {
    auto config = *spec.optimizer;
    auto seeds = spec.seeds;
    if (seeds.empty()) {
      seeds.push_back(config.seed);
    }

    std::optional<Individual> best;
    for (auto seed : seeds) {
      config.seed = seed;
      auto result = run(params, config);
      if (!best || better_solution(result.best, *best)) {
        best = result.best;
      }
    }
    return best->genome.automation;
  }

} // namespace

AutomationVector aggressive_vector() {
  PhaseMap<double> f;
  f[Phase::requirements] = 0.6;
  f[Phase::design] = 0.5;
  f[Phase::development] = 0.5;
  f[Phase::testing] = 0.7;
  f[Phase::deployment] = 0.8;
  f[Phase::maintenance] = 0.1;
  return AutomationVector{f};
}

void SweepSpec::validate() const {
  check_grid(beta_grid, "sweep.beta_grid");
  check_grid(alpha_grid, "sweep.alpha_grid");
  if (mode == SweepMode::fixed_vector && !vector) {
    throw ValidationError{"sweep.vector", "required in fixed_vector mode"};
  }
  if (mode == SweepMode::reoptimize) {
    if (!optimizer) {
      throw ValidationError{"sweep.optimizer", "required in reoptimize mode"};
    }
    optimizer->validate();
  }
}

std::vector<SweepCell> run_sweep(ScenarioParams const& params,
                                 SweepSpec const& spec) {
  spec.validate();
  params.validate();

  std::vector<SweepCell> cells;
  cells.reserve(spec.beta_grid.size() * spec.alpha_grid.size());
  for (auto beta : spec.beta_grid) {
    for (auto alpha : spec.alpha_grid) {
      auto cell_params = params;
      cell_params.oversight_factor = beta;
      cell_params.coord_retention = alpha;

      auto f = spec.mode == SweepMode::fixed_vector
                   ? *spec.vector
                   : reoptimized_vector(cell_params, spec);
      cells.push_back(make_cell(cell_params, f));
    }
  }
  return cells;
}

} // namespace stackopt
