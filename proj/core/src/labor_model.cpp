#include "stackopt/labor_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stackopt/errors.hpp"

namespace stackopt {

namespace {

  bool is_fraction(double v) { return v >= 0.0 && v <= 1.0; }

  std::string phase_field(std::string_view section, Phase p) {
    return std::string{section} + "." + std::string{key_of(p)};
  }

  // Shared core of the tipping analysis; `total` is the post-automation load
  // and `base` the effective baseline.
  TippingReport tipping_core(double f, int n, double total, double base) {
    TippingReport report;
    report.fte_absorbed = f * n;
    report.tipping_reached = report.fte_absorbed >= 1.0;

    auto absorbed = std::floor(report.fte_absorbed);
    auto capped = std::min(absorbed, static_cast<double>(n - 1));
    report.max_safe_reduction = static_cast<int>(std::max(0.0, capped));

    // total / (n - k) <= base / n, kept in product form.
    auto stable = 0;
    for (auto k = report.max_safe_reduction; k > 0; --k) {
      if (total * n <= base * (n - k)) {
        stable = k;
        break;
      }
    }
    report.stable_reduction = stable;
    report.per_person_load_after = total / (n - stable);
    return report;
  }

} // namespace

void ScenarioParams::validate() const {
  for (auto p : kPhases) {
    if (!(phase_hours[p] >= 0.0) || !std::isfinite(phase_hours[p])) {
      throw ValidationError{phase_field("phase_hours", p),
                            "must be a finite value >= 0"};
    }
    if (!(ai_time_factor[p] > 0.0) || !std::isfinite(ai_time_factor[p])) {
      throw ValidationError{phase_field("ai_time_factor", p), "must be > 0"};
    }
  }
  if (!(coord_hours >= 0.0) || !std::isfinite(coord_hours)) {
    throw ValidationError{"coord_hours", "must be a finite value >= 0"};
  }
  if (team_size < 1) {
    throw ValidationError{"team_size", "must be >= 1"};
  }
  if (!(capacity_hours > 0.0) || !std::isfinite(capacity_hours)) {
    throw ValidationError{"capacity_hours", "must be > 0"};
  }
  if (!(cost_rate >= 0.0) || !std::isfinite(cost_rate)) {
    throw ValidationError{"cost_rate", "must be a finite value >= 0"};
  }
  if (!is_fraction(oversight_factor)) {
    throw ValidationError{"oversight_factor", "must lie in [0, 1]"};
  }
  if (!is_fraction(coord_retention)) {
    throw ValidationError{"coord_retention", "must lie in [0, 1]"};
  }
  if (stated_base_hours &&
      (!(*stated_base_hours > 0.0) || !std::isfinite(*stated_base_hours))) {
    throw ValidationError{"stated_base_hours", "must be > 0 when present"};
  }
}

ScenarioParams ScenarioParams::paper() {
  ScenarioParams params;
  params.phase_hours[Phase::requirements] = 200.0;
  params.phase_hours[Phase::design] = 300.0;
  params.phase_hours[Phase::development] = 800.0;
  params.phase_hours[Phase::testing] = 600.0;
  params.phase_hours[Phase::deployment] = 100.0;
  params.phase_hours[Phase::maintenance] = 300.0;
  params.coord_hours = 500.0;
  params.team_size = 20;
  params.capacity_hours = 135.0;
  params.cost_rate = 75.0;
  params.oversight_factor = 0.2;
  params.coord_retention = 0.4;
  params.stated_base_hours = 2700.0;
  return params;
}

AutomationVector::AutomationVector(PhaseMap<double> fractions) {
  for (auto p : kPhases) {
    set(p, fractions[p]);
  }
}

AutomationVector AutomationVector::uniform(double f) {
  return AutomationVector{PhaseMap<double>::filled(f)};
}

void AutomationVector::set(Phase p, double f) {
  if (!is_fraction(f)) {
    throw ValidationError{phase_field("automation", p), "must lie in [0, 1]"};
  }
  fractions_[p] = f;
}

double baseline_labor(ScenarioParams const& params) {
  auto total = params.coord_hours;
  for (auto hours : params.phase_hours) {
    total += hours;
  }
  return total;
}

double effective_base(ScenarioParams const& params) {
  return params.stated_base_hours.value_or(baseline_labor(params));
}

double baseline_cost(ScenarioParams const& params) {
  return params.cost_rate * effective_base(params);
}

LaborBreakdown collapsed_labor(ScenarioParams const& params,
                               AutomationVector const& f) {
  LaborBreakdown out;
  auto total = 0.0;
  for (auto p : kPhases) {
    auto base = params.phase_hours[p];
    auto ai_hours = params.ai_time_factor[p] * base;
    out.human_hours[p] = (1.0 - f[p]) * base;
    out.oversight_hours[p] = params.oversight_factor * f[p] * ai_hours;
    total += out.human_hours[p] + out.oversight_hours[p];
  }
  out.coord_hours_residual = params.coord_retention * params.coord_hours;
  out.total_hours = total + out.coord_hours_residual;
  out.cost = params.cost_rate * out.total_hours;

  auto base = effective_base(params);
  out.labor_saved = base - out.total_hours;
  out.automation_fraction = base > 0.0 ? out.labor_saved / base : 0.0;
  return out;
}

double quality_ratio(LaborBreakdown const& breakdown) {
  auto dev = breakdown.human_hours[Phase::development] +
             breakdown.oversight_hours[Phase::development];
  if (!(dev > 0.0)) {
    throw DegenerateDenominator{
        "quality ratio undefined: development hours after automation are 0"};
  }
  auto test = breakdown.human_hours[Phase::testing] +
              breakdown.oversight_hours[Phase::testing];
  return test / dev;
}

double quality_ratio(ScenarioParams const& params, AutomationVector const& f) {
  return quality_ratio(collapsed_labor(params, f));
}

TippingReport tipping(ScenarioParams const& params,
                      LaborBreakdown const& breakdown) {
  return tipping_core(breakdown.automation_fraction, params.team_size,
                      breakdown.total_hours, effective_base(params));
}

TippingReport tipping_for_fraction(double f, int team_size, double base_hours) {
  if (team_size < 1) {
    throw ValidationError{"team_size", "must be >= 1"};
  }
  return tipping_core(f, team_size, (1.0 - f) * base_hours, base_hours);
}

bool feasible_capacity(ScenarioParams const& params,
                       LaborBreakdown const& breakdown,
                       int n) {
  return breakdown.total_hours <= n * params.capacity_hours;
}

double naive_heuristic_cost(ScenarioParams const& params, double f_uniform) {
  if (!is_fraction(f_uniform)) {
    throw ValidationError{"f_uniform", "must lie in [0, 1]"};
  }
  return (1.0 - f_uniform) * baseline_cost(params);
}

} // namespace stackopt
