#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "stackopt/errors.hpp"
#include "stackopt/evo.hpp"

using namespace stackopt;

namespace {

constexpr auto kInf = std::numeric_limits<double>::infinity();

Individual point(double cost, double quality, double violation = 0.0) {
  Individual ind;
  ind.objectives = {cost, quality};
  ind.constraints.total_violation = violation;
  return ind;
}

Genome genome_of(double f, int team) {
  return {AutomationVector::uniform(f), team};
}

std::vector<Individual> random_population(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coarse{0, 6};
  std::uniform_real_distribution<double> unit{0.0, 1.0};
  std::vector<Individual> pop;
  for (std::size_t i = 0; i < n; ++i) {
    // Coarse values force ties and duplicates.
    auto violation = unit(rng) < 0.3 ? 0.5 * coarse(rng) : 0.0;
    pop.push_back(point(coarse(rng), 0.1 * coarse(rng), violation));
  }
  return pop;
}

} // namespace

TEST_CASE("evaluate on the calibrated scenario") {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;

  SUBCASE("aggressive mean vector") {
    PhaseMap<double> m;
    m[Phase::requirements] = 0.6;
    m[Phase::design] = 0.5;
    m[Phase::development] = 0.5;
    m[Phase::testing] = 0.7;
    m[Phase::deployment] = 0.8;
    m[Phase::maintenance] = 0.1;
    auto eval = evaluate({AutomationVector{m}, 10}, params, config);
    CHECK(eval.objectives.cost == doctest::Approx(115500.0));
    CHECK(eval.objectives.quality == doctest::Approx(0.55));
    CHECK(eval.constraints.quality_violation == doctest::Approx(0.05));
    CHECK_FALSE(eval.constraints.feasible());
  }
  SUBCASE("no automation at baseline headcount") {
    auto eval = evaluate(genome_of(0.0, 20), params, config);
    CHECK(eval.objectives.cost == doctest::Approx(187500.0));
    CHECK(eval.objectives.quality == doctest::Approx(0.75));
    CHECK(eval.constraints.feasible());
  }
  SUBCASE("one person cannot carry the load") {
    auto eval = evaluate(genome_of(0.0, 1), params, config);
    CHECK(eval.constraints.capacity_violation == doctest::Approx(2365.0));
    // f = 1 - 2500/2700 -> floor(1.48) = 1 safe cut, 19 attempted.
    CHECK(eval.constraints.tipping_violation == doctest::Approx(18.0));
  }
  SUBCASE("deterministic") {
    auto g = genome_of(0.37, 12);
    auto a = evaluate(g, params, config);
    auto b = evaluate(g, params, config);
    CHECK(a.objectives == b.objectives);
    CHECK(a.constraints == b.constraints);
  }
  SUBCASE("degenerate quality is maximally violated") {
    auto p = params;
    p.oversight_factor = 0.0;
    auto eval = evaluate(genome_of(1.0, 20), p, config);
    CHECK(eval.objectives.quality == 0.0);
    CHECK(eval.constraints.quality_violation == doctest::Approx(0.6));
  }
}

TEST_CASE("constrained domination") {
  CHECK(constrained_dominates(point(100, 0.7), point(120, 0.65)));
  CHECK(constrained_dominates(point(100, 0.7), point(90, 0.8, 1.0)));
  CHECK_FALSE(constrained_dominates(point(100, 0.7), point(90, 0.8)));
  CHECK(constrained_dominates(point(90, 0.8), point(100, 0.7)));
  CHECK(constrained_dominates(point(500, 0.1, 0.5), point(1, 1.0, 0.7)));
  CHECK_FALSE(constrained_dominates(point(1, 1.0), point(1, 1.0)));
}

TEST_CASE("fast non-dominated sort") {
  SUBCASE("chain") {
    std::vector pop{point(1, -1), point(2, -2), point(3, -3)};
    auto fronts = fast_nondominated_sort(pop);
    REQUIRE(fronts.size() == 3);
    CHECK(fronts[0] == std::vector<std::size_t>{0});
    CHECK(fronts[1] == std::vector<std::size_t>{1});
    CHECK(fronts[2] == std::vector<std::size_t>{2});
    CHECK(pop[2].rank == 2);
  }
  SUBCASE("trade-off set") {
    std::vector pop{point(1, 0.1), point(2, 0.2), point(3, 0.3)};
    auto fronts = fast_nondominated_sort(pop);
    REQUIRE(fronts.size() == 1);
    CHECK(fronts[0].size() == 3);
  }
  SUBCASE("feasibility first") {
    std::vector pop{point(1, 1, 1.0), point(9, 0.1), point(1, 1, 2.0),
                    point(1, 1, 3.0)};
    auto fronts = fast_nondominated_sort(pop);
    CHECK(fronts[0] == std::vector<std::size_t>{1});
  }
  SUBCASE("agrees with brute force on random populations") {
    std::mt19937_64 rng{99};
    for (int trial = 0; trial < 200; ++trial) {
      auto n = std::uniform_int_distribution<std::size_t>{1, 50}(rng);
      auto pop = random_population(rng, n);
      auto expected = oracle::brute_force_ranks(pop);
      auto fronts = fast_nondominated_sort(pop);
      std::size_t covered = 0;
      for (std::size_t f = 0; f < fronts.size(); ++f) {
        covered += fronts[f].size();
        for (auto i : fronts[f]) {
          CHECK(expected[i] == f);
          CHECK(pop[i].rank == f);
        }
      }
      CHECK(covered == n);
    }
  }
}

TEST_CASE("crowding distance") {
  std::vector one{point(1, 1)};
  CHECK(crowding_distance(one) == std::vector<double>{kInf});

  std::vector two{point(1, 1), point(2, 2)};
  CHECK(crowding_distance(two) == std::vector<double>{kInf, kInf});

  std::vector three{point(0, 0), point(2, 1), point(1, 0.5)};
  auto d = crowding_distance(three);
  CHECK(d[0] == kInf);
  CHECK(d[1] == kInf);
  CHECK(d[2] == doctest::Approx(2.0));

  // Degenerate range contributes nothing for that objective.
  std::vector flat{point(0, 0.5), point(1, 0.5), point(2, 0.5), point(4, 0.5)};
  auto df = crowding_distance(flat);
  CHECK(df[0] == kInf);
  CHECK(df[3] == kInf);
  // Quality ties keep index order, so indices 0 and 3 are its boundaries too.
  CHECK(df[1] == doctest::Approx(0.5));
  CHECK(df[2] == doctest::Approx(0.75));
}

TEST_CASE("binary tournament") {
  Rng rng{3};
  SUBCASE("rank wins") {
    std::vector pop{point(1, 1), point(1, 1)};
    pop[0].rank = 0;
    pop[1].rank = 2;
    for (int i = 0; i < 50; ++i) {
      auto const& w = tournament_select(pop, rng);
      // Only a draw of the same index twice can yield rank 2.
      CHECK((w.rank == 0 || &w == &pop[1]));
    }
  }
  SUBCASE("crowding breaks rank ties") {
    std::vector pop{point(1, 1), point(2, 2)};
    pop[0].crowding = 1.3;
    pop[1].crowding = kInf;
    int first_wins = 0;
    for (int i = 0; i < 200; ++i) {
      if (&tournament_select(pop, rng) == &pop[0]) {
        ++first_wins;
      }
    }
    // pop[0] wins only when drawn twice: expected 1/4 of the time.
    CHECK(first_wins > 20);
    CHECK(first_wins < 90);
  }
  SUBCASE("full tie keeps the first draw") {
    std::vector pop{point(1, 1), point(1, 1)};
    Rng a{11};
    Rng b{11};
    std::uniform_int_distribution<std::size_t> pick{0, 1};
    for (int i = 0; i < 20; ++i) {
      auto const& w = tournament_select(pop, a);
      auto first = pick(b);
      pick(b);
      CHECK(&w == &pop[first]);
    }
  }
}

TEST_CASE("uniform crossover") {
  OptimizerConfig config;
  Rng rng{5};
  auto a = genome_of(0.2, 4);
  auto b = genome_of(0.9, 25);

  SUBCASE("identical parents") {
    auto [x, y] = uniform_crossover(a, a, rng, config);
    CHECK(x == a);
    CHECK(y == a);
  }
  SUBCASE("all-swap mask exchanges every gene") {
    SwapMask all;
    all.fill(true);
    auto [x, y] = apply_swap_mask(a, b, all, config);
    CHECK(x == b);
    CHECK(y == a);
  }
  SUBCASE("fixed phases are never swapped") {
    config.fixed_phases[Phase::maintenance] = 0.1;
    auto fa = a;
    auto fb = b;
    fa.automation.set(Phase::maintenance, 0.1);
    fb.automation.set(Phase::maintenance, 0.1);
    SwapMask all;
    all.fill(true);
    auto [x, y] = apply_swap_mask(fa, fb, all, config);
    CHECK(x.automation[Phase::maintenance] == 0.1);
    CHECK(y.automation[Phase::maintenance] == 0.1);
  }
  SUBCASE("zero crossover probability copies parents") {
    config.crossover_prob = 0.0;
    for (int i = 0; i < 50; ++i) {
      auto [x, y] = uniform_crossover(a, b, rng, config);
      CHECK(x == a);
      CHECK(y == b);
    }
  }
  SUBCASE("children hold parental genes only") {
    config.crossover_prob = 1.0;
    for (int i = 0; i < 50; ++i) {
      auto [x, y] = uniform_crossover(a, b, rng, config);
      for (auto p : kPhases) {
        CHECK(x.automation[p] + y.automation[p] == doctest::Approx(1.1));
      }
      CHECK(x.team_size + y.team_size == 29);
    }
  }
}

TEST_CASE("mutation") {
  OptimizerConfig config;

  SUBCASE("clamps at the upper bounds") {
    config.real_mutation_prob = 1.0;
    config.int_perturb_prob = 1.0;
    config.mutation_sigma = 5.0;
    Rng rng{17};
    for (int i = 0; i < 200; ++i) {
      auto g = mutate(genome_of(1.0, 30), rng, config);
      for (auto p : kPhases) {
        CHECK(g.automation[p] >= 0.0);
        CHECK(g.automation[p] <= 1.0);
      }
      CHECK(g.team_size >= 29);
      CHECK(g.team_size <= 30);
    }
  }
  SUBCASE("disabled mutation is the identity") {
    config.real_mutation_prob = 0.0;
    config.int_perturb_prob = 0.0;
    Rng rng{1};
    auto g = genome_of(0.42, 7);
    for (int i = 0; i < 50; ++i) {
      CHECK(mutate(g, rng, config) == g);
    }
  }
  SUBCASE("fixed phases untouched") {
    config.real_mutation_prob = 1.0;
    config.fixed_phases[Phase::design] = 0.25;
    Rng rng{2};
    auto g = genome_of(0.5, 10);
    g.automation.set(Phase::design, 0.25);
    for (int i = 0; i < 50; ++i) {
      g = mutate(g, rng, config);
      CHECK(g.automation[Phase::design] == 0.25);
    }
  }
  SUBCASE("genome closure under adversarial noise") {
    config.real_mutation_prob = 1.0;
    config.int_perturb_prob = 1.0;
    config.mutation_sigma = 100.0;
    config.team_min = 3;
    config.team_max = 5;
    Rng rng{23};
    auto g = genome_of(0.5, 4);
    for (int i = 0; i < 1000; ++i) {
      g = mutate(g, rng, config);
      CHECK(g.team_size >= 3);
      CHECK(g.team_size <= 5);
      auto [x, y] = uniform_crossover(g, genome_of(0.0, 3), rng, config);
      CHECK(x.team_size >= 3);
      CHECK(y.team_size <= 5);
    }
  }
}

TEST_CASE("config validation") {
  OptimizerConfig config;
  CHECK_NOTHROW(config.validate());
  config.population_size = 7;
  CHECK_THROWS_AS(config.validate(), ConfigInvalid);
  config = {};
  config.population_size = 2;
  CHECK_THROWS_AS(config.validate(), ConfigInvalid);
  config = {};
  config.mutation_sigma = 0.0;
  CHECK_THROWS_AS(config.validate(), ConfigInvalid);
  config = {};
  config.crossover_prob = 1.5;
  CHECK_THROWS_AS(config.validate(), ConfigInvalid);
  config = {};
  config.team_max = 0;
  CHECK_THROWS_AS(config.validate(), ConfigInvalid);
  config = {};
  config.fixed_phases[Phase::testing] = -0.1;
  CHECK_THROWS_AS(config.validate(), ConfigInvalid);
  config = {};
  config.violation_scales.tipping = 0.0;
  CHECK_THROWS_AS(run(ScenarioParams::paper(), config), ConfigInvalid);
}

TEST_CASE("run converges to full automation on an unconstrained scenario") {
  // Equal test and dev hours keep quality at 1 whenever f_test = f_dev, and
  // capacity is generous, so the optimum is f = 1 everywhere.
  ScenarioParams params;
  for (auto p : kPhases) {
    params.phase_hours[p] = 100.0;
  }
  params.coord_hours = 200.0;
  params.team_size = 10;
  params.capacity_hours = 500.0;
  params.cost_rate = 75.0;

  OptimizerConfig config;
  config.seed = 4;
  auto result = run(params, config);
  auto target = 75.0 * (0.2 * 600.0 + 0.4 * 200.0);
  CHECK(result.best_feasible);
  CHECK(result.best.objectives.cost == doctest::Approx(target).epsilon(1e-6));
  CHECK(result.best_cost_trace.size() == 101);
}

TEST_CASE("run on the calibrated scenario") {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;
  config.seed = 12;
  auto result = run(params, config);

  SUBCASE("front respects the quality floor") {
    REQUIRE_FALSE(result.front.empty());
    for (auto const& ind : result.front) {
      CHECK(ind.feasible());
      CHECK(ind.objectives.quality >= 0.6 - 1e-9);
    }
  }
  SUBCASE("elitism") {
    std::optional<double> previous;
    for (auto const& v : result.best_cost_trace) {
      if (previous) {
        REQUIRE(v.has_value());
        CHECK(*v <= *previous);
      }
      if (v) {
        previous = v;
      }
    }
  }
  SUBCASE("tipping report belongs to the best genome") {
    auto b = collapsed_labor(params, result.best.genome.automation);
    CHECK(result.tipping == tipping(params, b));
    CHECK(result.seed == 12);
  }
  SUBCASE("deterministic per seed") {
    auto again = run(params, config);
    CHECK(again.front == result.front);
    CHECK(again.best == result.best);
    CHECK(again.best_cost_trace == result.best_cost_trace);

    config.seed = 13;
    auto other = run(params, config);
    CHECK_FALSE(other.front == result.front);
  }
}

TEST_CASE("reduced problem matches exhaustive grid") {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;
  for (auto p : kPhases) {
    if (p != Phase::development && p != Phase::testing) {
      config.fixed_phases[p] = 0.0;
    }
  }
  std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  auto expected = oracle::exhaustive_dev_test(params, config, grid);
  CHECK(expected.evaluated == 750);
  // f_dev = f_test = 1: 75 * (900 + 0.2 * 1400 + 200) = 103,500.
  CHECK(expected.cost == doctest::Approx(103500.0));

  config.seed = 1;
  auto result = run(params, config);
  REQUIRE(result.best_feasible);
  CHECK(std::abs(result.best.objectives.cost - expected.cost) <=
        0.01 * expected.cost);
  for (auto p : kPhases) {
    if (config.is_fixed(p)) {
      CHECK(result.best.genome.automation[p] == 0.0);
    }
  }
}

TEST_CASE("front is feasible when the initial population has a feasible member") {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;
  config.generations = 20;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    config.seed = seed;
    Nsga2 engine{params, config};
    engine.initialize();
    auto any_feasible = std::ranges::any_of(engine.population(),
                                            [](auto const& i) { return i.feasible(); });
    for (int g = 0; g < config.generations; ++g) {
      engine.step();
    }
    if (any_feasible) {
      for (auto const& ind : engine.population()) {
        if (ind.rank == 0) {
          CHECK(ind.feasible());
        }
      }
    }
  }
}

TEST_CASE("a dominant genome fixates without mutation") {
  auto params = ScenarioParams::paper();
  OptimizerConfig config;
  config.real_mutation_prob = 0.0;
  config.int_perturb_prob = 0.0;
  config.crossover_prob = 0.0;
  config.population_size = 20;
  config.seed = 8;

  // f = 1 everywhere at N = 20 dominates every f = 0 genome.
  std::vector<Genome> genomes(20, genome_of(0.0, 20));
  for (int i = 0; i < 20; ++i) {
    genomes[static_cast<std::size_t>(i)].team_size = 1 + i;
  }
  genomes[7] = genome_of(1.0, 20);

  Nsga2 engine{params, config};
  engine.initialize(genomes);
  for (int g = 0; g < 50; ++g) {
    engine.step();
  }
  for (auto const& ind : engine.population()) {
    CHECK(ind.genome == genome_of(1.0, 20));
  }
}

TEST_CASE("seeded population must match the configuration") {
  OptimizerConfig config;
  config.population_size = 4;
  Nsga2 engine{ScenarioParams::paper(), config};
  std::vector<Genome> too_few(2, genome_of(0.5, 10));
  CHECK_THROWS_AS(engine.initialize(too_few), ConfigInvalid);
  std::vector<Genome> out_of_range(4, genome_of(0.5, 31));
  CHECK_THROWS_AS(engine.initialize(out_of_range), ConfigInvalid);
}
