#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stackopt/evo.hpp"
#include "stackopt/labor_model.hpp"

namespace stackopt {

enum class SweepMode { fixed_vector, reoptimize };

// Mean automation vector of the aggressive configuration
// (req 0.6, design 0.5, dev 0.5, test 0.7, deploy 0.8, maint 0.1).
AutomationVector aggressive_vector();

struct SweepSpec {
  std::vector<double> beta_grid{0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35};
  std::vector<double> alpha_grid{0.2, 0.3, 0.4, 0.5, 0.6};
  SweepMode mode = SweepMode::fixed_vector;
  std::optional<AutomationVector> vector = aggressive_vector();
  std::optional<OptimizerConfig> optimizer;
  // Reoptimize mode; empty means the optimizer's own seed.
  std::vector<std::uint64_t> seeds;

  // Throws ValidationError naming the offending field.
  void validate() const;

  friend bool operator==(SweepSpec const&, SweepSpec const&) = default;
};

struct SweepCell {
  double beta = 0.0;
  double alpha = 0.0;
  double automation_fraction = 0.0;
  int max_safe_reduction = 0;
  int stable_reduction = 0;
  double per_person_load = 0.0;
  double cost = 0.0;

  friend bool operator==(SweepCell const&, SweepCell const&) = default;
};

// Cells in row-major order: beta outer ascending, alpha inner ascending.
std::vector<SweepCell> run_sweep(ScenarioParams const& params,
                                 SweepSpec const& spec);

} // namespace stackopt
