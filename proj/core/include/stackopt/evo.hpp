#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "stackopt/labor_model.hpp"
#include "stackopt/objectives.hpp"

namespace stackopt {

using Rng = std::mt19937_64;

// Decision vector: per-phase automation plus the integer team size.
struct Genome {
  AutomationVector automation;
  int team_size = 1;

  friend bool operator==(Genome const&, Genome const&) = default;
};

struct ConstraintStatus {
  double capacity_violation = 0.0;
  double quality_violation = 0.0;
  double tipping_violation = 0.0;
  double total_violation = 0.0;

  bool feasible() const noexcept { return total_violation == 0.0; }

  friend bool operator==(ConstraintStatus const&,
                         ConstraintStatus const&) = default;
};

struct Individual {
  Genome genome;
  ObjectiveVector objectives;
  ConstraintStatus constraints;
  std::size_t rank = 0;
  double crowding = 0.0;

  bool feasible() const noexcept { return constraints.feasible(); }

  friend bool operator==(Individual const&, Individual const&) = default;
};

struct ViolationScales {
  double capacity = 100.0; // hours
  double quality = 0.1;    // quality-ratio units
  double tipping = 1.0;    // FTE

  friend bool operator==(ViolationScales const&,
                         ViolationScales const&) = default;
};

struct OptimizerConfig {
  int population_size = 50;
  int generations = 100;
  double crossover_prob = 0.5;
  double mutation_sigma = 0.05;
  double real_mutation_prob = 1.0 / 6.0;
  double int_perturb_prob = 0.2;
  int team_min = 1;
  int team_max = 30;
  // Phases pinned to a constant fraction; they are never varied.
  PhaseMap<std::optional<double>> fixed_phases{};
  std::uint64_t seed = 0;
  double quality_floor = 0.6;
  ViolationScales violation_scales{};

  // Throws ConfigInvalid naming the offending field.
  void validate() const;

  bool is_fixed(Phase p) const noexcept { return fixed_phases[p].has_value(); }

  friend bool operator==(OptimizerConfig const&,
                         OptimizerConfig const&) = default;
};

struct Evaluation {
  ObjectiveVector objectives;
  ConstraintStatus constraints;
};

Evaluation evaluate(Genome const& genome,
                    ScenarioParams const& params,
                    OptimizerConfig const& config);

// Feasibility first, then lower total violation, then Pareto dominance on
// (cost minimized, quality maximized).
bool constrained_dominates(Individual const& a, Individual const& b);

// Fronts of indices into `pop`; also writes each individual's rank.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<Individual> pop);

// Crowding distance of each member of `front`, in the same order.
std::vector<double> crowding_distance(std::span<Individual const> front);

Individual const& tournament_select(std::span<Individual const> pop, Rng& rng);

// Gene positions: the six phase fractions followed by team size.
using SwapMask = std::array<bool, kPhaseCount + 1>;

std::pair<Genome, Genome> apply_swap_mask(Genome const& a,
                                          Genome const& b,
                                          SwapMask const& mask,
                                          OptimizerConfig const& config);

std::pair<Genome, Genome> uniform_crossover(Genome const& a,
                                            Genome const& b,
                                            Rng& rng,
                                            OptimizerConfig const& config);

Genome mutate(Genome g, Rng& rng, OptimizerConfig const& config);

Genome random_genome(Rng& rng, OptimizerConfig const& config);

struct RunResult {
  std::vector<Individual> front;
  Individual best;
  bool best_feasible = false;
  TippingReport tipping;
  // Best feasible cost of the population after initialization and after
  // every generation; empty when no member was feasible.
  std::vector<std::optional<double>> best_cost_trace;
  std::uint64_t seed = 0;
};

// Best-solution ordering: feasible first, then min cost, max quality,
// smaller team, lexicographic fractions.
bool better_solution(Individual const& a, Individual const& b);

// Generational NSGA-II state. run() drives it to completion; it is exposed
// so callers can observe or seed the population directly.
class Nsga2 {
public:
  Nsga2(ScenarioParams params, OptimizerConfig config);

  void initialize();
  // Throws ConfigInvalid unless exactly population_size valid genomes.
  void initialize(std::span<Genome const> genomes);

  // One generation: offspring, (mu + lambda) merge, truncation.
  void step();

  std::span<Individual const> population() const noexcept {
    return population_;
  }
  int generation() const noexcept { return generation_; }
  std::optional<double> best_feasible_cost() const;

  ScenarioParams const& params() const noexcept { return params_; }
  OptimizerConfig const& config() const noexcept { return config_; }

private:
  Individual make_individual(Genome genome) const;

  ScenarioParams params_;
  OptimizerConfig config_;
  Rng rng_;
  std::vector<Individual> population_;
  int generation_ = 0;
};

RunResult run(ScenarioParams const& params, OptimizerConfig const& config);

} // namespace stackopt
