#include "stackopt/evo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "stackopt/errors.hpp"

namespace stackopt {

namespace {

  constexpr auto kInf = std::numeric_limits<double>::infinity();

  bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

  double draw_unit(Rng& rng) {
    return std::uniform_real_distribution<double>{0.0, 1.0}(rng);
  }

  bool pareto_dominates(ObjectiveVector const& a, ObjectiveVector const& b) {
    auto no_worse = a.cost <= b.cost && a.quality >= b.quality;
    auto better = a.cost < b.cost || a.quality > b.quality;
    return no_worse && better;
  }

  // Writes crowding distances for every front and returns the fronts.
  std::vector<std::vector<std::size_t>> rank_and_crowd(
      std::span<Individual> pop) {
    auto fronts = fast_nondominated_sort(pop);
    for (auto const& front : fronts) {
      std::vector<Individual> members;
      members.reserve(front.size());
      for (auto i : front) {
        members.push_back(pop[i]);
      }
      auto distances = crowding_distance(members);
      for (std::size_t k = 0; k < front.size(); ++k) {
        pop[front[k]].crowding = distances[k];
      }
    }
    return fronts;
  }

  void check_genome(Genome const& g, OptimizerConfig const& config) {
    if (g.team_size < config.team_min || g.team_size > config.team_max) {
      throw ConfigInvalid{"genome.team_size", "outside [team_min, team_max]"};
    }
    for (auto p : kPhases) {
      if (config.is_fixed(p) && g.automation[p] != *config.fixed_phases[p]) {
        throw ConfigInvalid{"genome.automation." + std::string{key_of(p)},
                            "differs from its fixed value"};
      }
    }
  }

} // namespace

void OptimizerConfig::validate() const {
  if (population_size < 4 || population_size % 2 != 0) {
    throw ConfigInvalid{"optimizer.population_size", "must be even and >= 4"};
  }
  if (generations < 1) {
    throw ConfigInvalid{"optimizer.generations", "must be >= 1"};
  }
  if (!is_probability(crossover_prob)) {
    throw ConfigInvalid{"optimizer.crossover_prob", "must lie in [0, 1]"};
  }
  if (!(mutation_sigma > 0.0) || !std::isfinite(mutation_sigma)) {
    throw ConfigInvalid{"optimizer.mutation_sigma", "must be > 0"};
  }
  if (!is_probability(real_mutation_prob)) {
    throw ConfigInvalid{"optimizer.real_mutation_prob", "must lie in [0, 1]"};
  }
  if (!is_probability(int_perturb_prob)) {
    throw ConfigInvalid{"optimizer.int_perturb_prob", "must lie in [0, 1]"};
  }
  if (team_min < 1) {
    throw ConfigInvalid{"optimizer.team_min", "must be >= 1"};
  }
  if (team_max < team_min) {
    throw ConfigInvalid{"optimizer.team_max", "must be >= team_min"};
  }
  for (auto p : kPhases) {
    if (fixed_phases[p] && !is_probability(*fixed_phases[p])) {
      throw ConfigInvalid{"optimizer.fixed_phases." + std::string{key_of(p)},
                          "must lie in [0, 1]"};
    }
  }
  if (!std::isfinite(quality_floor)) {
    throw ConfigInvalid{"optimizer.quality_floor", "must be finite"};
  }
  auto check_scale = [](double v, char const* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigInvalid{std::string{"optimizer.violation_scales."} + name,
                          "must be > 0"};
    }
  };
  check_scale(violation_scales.capacity, "capacity");
  check_scale(violation_scales.quality, "quality");
  check_scale(violation_scales.tipping, "tipping");
}

Evaluation evaluate(Genome const& genome,
                    ScenarioParams const& params,
                    OptimizerConfig const& config) {
  auto breakdown = collapsed_labor(params, genome.automation);

  Evaluation out;
  out.objectives.cost = breakdown.cost;
  try {
    out.objectives.quality = quality_ratio(breakdown);
  }
  catch (DegenerateDenominator const&) {
    out.objectives.quality = 0.0;
  }

  auto& c = out.constraints;
  c.capacity_violation = std::max(
      0.0, breakdown.total_hours - genome.team_size * params.capacity_hours);
  c.quality_violation =
      std::max(0.0, config.quality_floor - out.objectives.quality);

  auto report = tipping(params, breakdown);
  auto cut = params.team_size - genome.team_size;
  c.tipping_violation =
      static_cast<double>(std::max(0, cut - report.max_safe_reduction));

  auto const& s = config.violation_scales;
  c.total_violation = c.capacity_violation / s.capacity +
                      c.quality_violation / s.quality +
                      c.tipping_violation / s.tipping;
  return out;
}

bool constrained_dominates(Individual const& a, Individual const& b) {
  auto fa = a.feasible();
  auto fb = b.feasible();
  if (fa != fb) {
    return fa;
  }
  if (!fa) {
    return a.constraints.total_violation < b.constraints.total_violation;
  }
  return pareto_dominates(a.objectives, b.objectives);
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<Individual> pop) {
  auto n = pop.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> counts(n, 0);
  std::vector<std::vector<std::size_t>> fronts;

  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (constrained_dominates(pop[i], pop[j])) {
        dominated[i].push_back(j);
        ++counts[j];
      }
      else if (constrained_dominates(pop[j], pop[i])) {
        dominated[j].push_back(i);
        ++counts[i];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] == 0) {
      current.push_back(i);
    }
  }

  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (auto i : current) {
      pop[i].rank = fronts.size();
      for (auto j : dominated[i]) {
        if (--counts[j] == 0) {
          next.push_back(j);
        }
      }
    }
    std::ranges::sort(next);
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<Individual const> front) {
  auto n = front.size();
  std::vector<double> distance(n, 0.0);
  if (n == 0) {
    return distance;
  }

  // Both coordinates as minimization.
  std::array<double (*)(Individual const&), 2> const objectives{
      [](Individual const& x) { return x.objectives.cost; },
      [](Individual const& x) { return -x.objectives.quality; },
  };

  std::vector<std::size_t> order(n);
  for (auto objective : objectives) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::stable_sort(order, [&](auto lhs, auto rhs) {
      return objective(front[lhs]) < objective(front[rhs]);
    });

    distance[order.front()] = kInf;
    distance[order.back()] = kInf;

    auto range = objective(front[order.back()]) - objective(front[order.front()]);
    if (!(range > 0.0)) {
      continue;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
      auto gap = objective(front[order[k + 1]]) - objective(front[order[k - 1]]);
      distance[order[k]] += gap / range;
    }
  }
  return distance;
}

Individual const& tournament_select(std::span<Individual const> pop, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick{0, pop.size() - 1};
  auto const& first = pop[pick(rng)];
  auto const& second = pop[pick(rng)];
  if (second.rank < first.rank) {
    return second;
  }
  if (second.rank == first.rank && second.crowding > first.crowding) {
    return second;
  }
  return first;
}

std::pair<Genome, Genome> apply_swap_mask(Genome const& a,
                                          Genome const& b,
                                          SwapMask const& mask,
                                          OptimizerConfig const& config) {
  auto left = a;
  auto right = b;
  for (auto p : kPhases) {
    if (mask[index_of(p)] && !config.is_fixed(p)) {
      left.automation.set(p, b.automation[p]);
      right.automation.set(p, a.automation[p]);
    }
  }
  if (mask[kPhaseCount]) {
    std::swap(left.team_size, right.team_size);
  }
  return {std::move(left), std::move(right)};
}

std::pair<Genome, Genome> uniform_crossover(Genome const& a,
                                            Genome const& b,
                                            Rng& rng,
                                            OptimizerConfig const& config) {
  if (!(draw_unit(rng) < config.crossover_prob)) {
    return {a, b};
  }
  SwapMask mask{};
  for (auto& bit : mask) {
    bit = draw_unit(rng) < 0.5;
  }
  return apply_swap_mask(a, b, mask, config);
}

Genome mutate(Genome g, Rng& rng, OptimizerConfig const& config) {
  std::normal_distribution<double> noise{0.0, config.mutation_sigma};
  for (auto p : kPhases) {
    if (config.is_fixed(p)) {
      continue;
    }
    if (draw_unit(rng) < config.real_mutation_prob) {
      auto v = g.automation[p] + noise(rng);
      g.automation.set(p, std::clamp(v, 0.0, 1.0));
    }
  }
  if (draw_unit(rng) < config.int_perturb_prob) {
    auto step = draw_unit(rng) < 0.5 ? -1 : 1;
    g.team_size =
        std::clamp(g.team_size + step, config.team_min, config.team_max);
  }
  return g;
}

Genome random_genome(Rng& rng, OptimizerConfig const& config) {
  Genome g;
  for (auto p : kPhases) {
    g.automation.set(p, config.fixed_phases[p].value_or(draw_unit(rng)));
  }
  g.team_size = std::uniform_int_distribution<int>{config.team_min,
                                                   config.team_max}(rng);
  return g;
}

bool better_solution(Individual const& a, Individual const& b) {
  if (a.feasible() != b.feasible()) {
    return a.feasible();
  }
  if (!a.feasible() &&
      a.constraints.total_violation != b.constraints.total_violation) {
    return a.constraints.total_violation < b.constraints.total_violation;
  }
  if (a.objectives.cost != b.objectives.cost) {
    return a.objectives.cost < b.objectives.cost;
  }
  if (a.objectives.quality != b.objectives.quality) {
    return a.objectives.quality > b.objectives.quality;
  }
  if (a.genome.team_size != b.genome.team_size) {
    return a.genome.team_size < b.genome.team_size;
  }
  return a.genome.automation.fractions().values <
         b.genome.automation.fractions().values;
}

Nsga2::Nsga2(ScenarioParams params, OptimizerConfig config)
    : params_{std::move(params)}
    , config_{std::move(config)}
    , rng_{config_.seed} {
  params_.validate();
  config_.validate();
}

Individual Nsga2::make_individual(Genome genome) const {
  Individual ind;
  auto eval = evaluate(genome, params_, config_);
  ind.genome = std::move(genome);
  ind.objectives = eval.objectives;
  ind.constraints = eval.constraints;
  return ind;
}

void Nsga2::initialize() {
  population_.clear();
  population_.reserve(static_cast<std::size_t>(config_.population_size));
  for (auto i = 0; i < config_.population_size; ++i) {
    population_.push_back(make_individual(random_genome(rng_, config_)));
  }
  rank_and_crowd(population_);
  generation_ = 0;
}

void Nsga2::initialize(std::span<Genome const> genomes) {
  if (genomes.size() != static_cast<std::size_t>(config_.population_size)) {
    throw ConfigInvalid{"population", "size must equal population_size"};
  }
  population_.clear();
  for (auto const& g : genomes) {
    check_genome(g, config_);
    population_.push_back(make_individual(g));
  }
  rank_and_crowd(population_);
  generation_ = 0;
}

void Nsga2::step() {
  auto const size = static_cast<std::size_t>(config_.population_size);

  std::vector<Individual> merged = population_;
  merged.reserve(2 * size);
  while (merged.size() < 2 * size) {
    auto const& a = tournament_select(population_, rng_);
    auto const& b = tournament_select(population_, rng_);
    auto [left, right] = uniform_crossover(a.genome, b.genome, rng_, config_);
    left = mutate(std::move(left), rng_, config_);
    right = mutate(std::move(right), rng_, config_);
    merged.push_back(make_individual(std::move(left)));
    merged.push_back(make_individual(std::move(right)));
  }

  auto fronts = rank_and_crowd(merged);

  std::vector<Individual> next;
  next.reserve(size);
  for (auto& front : fronts) {
    if (next.size() + front.size() <= size) {
      for (auto i : front) {
        next.push_back(merged[i]);
      }
      continue;
    }
    std::ranges::stable_sort(front, [&](auto lhs, auto rhs) {
      return merged[lhs].crowding > merged[rhs].crowding;
    });
    for (std::size_t k = 0; next.size() < size; ++k) {
      next.push_back(merged[front[k]]);
    }
    break;
  }

  population_ = std::move(next);
  ++generation_;
}

std::optional<double> Nsga2::best_feasible_cost() const {
  std::optional<double> best;
  for (auto const& ind : population_) {
    if (ind.feasible() && (!best || ind.objectives.cost < *best)) {
      best = ind.objectives.cost;
    }
  }
  return best;
}

RunResult run(ScenarioParams const& params, OptimizerConfig const& config) {
  Nsga2 engine{params, config};
  engine.initialize();

  RunResult result;
  result.seed = config.seed;
  result.best_cost_trace.reserve(static_cast<std::size_t>(config.generations) +
                                 1);
  result.best_cost_trace.push_back(engine.best_feasible_cost());
  for (auto g = 0; g < config.generations; ++g) {
    engine.step();
    result.best_cost_trace.push_back(engine.best_feasible_cost());
  }

  auto pop = engine.population();
  for (auto const& ind : pop) {
    if (ind.rank == 0) {
      result.front.push_back(ind);
    }
  }
  result.best = *std::ranges::min_element(
      pop, [](auto const& a, auto const& b) { return better_solution(a, b); });
  result.best_feasible = result.best.feasible();
  result.tipping =
      tipping(params, collapsed_labor(params, result.best.genome.automation));
  return result;
}

} // namespace stackopt
