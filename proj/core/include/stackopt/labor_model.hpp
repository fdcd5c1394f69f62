#pragma once

#include <optional>

#include "stackopt/phase.hpp"

namespace stackopt {

// Baseline project description plus the coefficients of the AI-collapsed
// labor model. All hour quantities are in human-equivalent hours.
struct ScenarioParams {
  PhaseMap<double> phase_hours{};
  double coord_hours = 0.0;
  int team_size = 1;
  double capacity_hours = 1.0;
  double cost_rate = 0.0;

  // Human oversight hours per hour of AI-executed work.
  double oversight_factor = 0.2;
  // Share of coordination overhead that survives AI integration.
  double coord_retention = 0.4;
  // AI execution time per phase as a multiple of the baseline human hours.
  PhaseMap<double> ai_time_factor = PhaseMap<double>::filled(1.0);

  // Overrides the summed baseline for every downstream ratio when set.
  std::optional<double> stated_base_hours;

  // Throws ValidationError naming the offending field.
  void validate() const;

  // The calibrated reference scenario (N = 20, c = 75, stated base 2700 h).
  static ScenarioParams paper();

  friend bool operator==(ScenarioParams const&,
                         ScenarioParams const&) = default;
};

// Per-phase automation fractions, each in [0, 1].
class AutomationVector {
public:
  AutomationVector() = default;
  explicit AutomationVector(PhaseMap<double> fractions);

  static AutomationVector uniform(double f);

  double operator[](Phase p) const noexcept { return fractions_[p]; }
  void set(Phase p, double f);

  PhaseMap<double> const& fractions() const noexcept { return fractions_; }

  friend bool operator==(AutomationVector const&,
                         AutomationVector const&) = default;

private:
  PhaseMap<double> fractions_{};
};

struct LaborBreakdown {
  PhaseMap<double> human_hours{};
  PhaseMap<double> oversight_hours{};
  double coord_hours_residual = 0.0;
  double total_hours = 0.0;
  double cost = 0.0;
  double labor_saved = 0.0;
  double automation_fraction = 0.0;

  friend bool operator==(LaborBreakdown const&,
                         LaborBreakdown const&) = default;
};

struct TippingReport {
  double fte_absorbed = 0.0;
  bool tipping_reached = false;
  int max_safe_reduction = 0;
  int stable_reduction = 0;
  double per_person_load_after = 0.0;

  friend bool operator==(TippingReport const&,
                         TippingReport const&) = default;
};

// Sum of all phase hours plus coordination, ignoring stated_base_hours.
double baseline_labor(ScenarioParams const& params);

// stated_base_hours if present, otherwise baseline_labor().
double effective_base(ScenarioParams const& params);

double baseline_cost(ScenarioParams const& params);

// Human, oversight and residual coordination hours once `f` of each phase
// is executed by AI. Coordination retention applies even when f is zero.
LaborBreakdown collapsed_labor(ScenarioParams const& params,
                               AutomationVector const& f);

// Testing hours over development hours after automation (human plus
// oversight). Throws DegenerateDenominator if development hours are zero.
double quality_ratio(ScenarioParams const& params, AutomationVector const& f);
double quality_ratio(LaborBreakdown const& breakdown);

TippingReport tipping(ScenarioParams const& params,
                      LaborBreakdown const& breakdown);

// Tipping analysis for a scalar effective automation fraction, bypassing the
// labor model: the post-automation load is taken as (1 - f) * base_hours.
TippingReport tipping_for_fraction(double f, int team_size, double base_hours);

bool feasible_capacity(ScenarioParams const& params,
                       LaborBreakdown const& breakdown,
                       int n);

// Linear cost scaling (1 - f) * baseline cost, the naive uniform heuristic.
double naive_heuristic_cost(ScenarioParams const& params, double f_uniform);

} // namespace stackopt
