#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "stackopt/evo.hpp"
#include "stackopt/labor_model.hpp"
#include "stackopt/metrics.hpp"
#include "stackopt/sweep.hpp"

namespace stackopt {

// A scenario file after validation and default resolution.
struct ResolvedConfig {
  ScenarioParams params;
  OptimizerConfig optimizer;
  // True when the file supplied optimizer.seed explicitly.
  bool seed_specified = false;
  std::optional<SweepSpec> sweep;
  // Stable hash of the resolved form, excluding the seed.
  std::string digest;
};

// Parses and validates a scenario document. Throws ParseError on malformed
// JSON and ValidationError (naming the field path) on bad or unknown keys.
ResolvedConfig parse_scenario(std::string_view text);

// As parse_scenario, reading `path`; throws IoError if it cannot be read.
ResolvedConfig load_scenario(std::filesystem::path const& path);

// The built-in calibrated scenario with default optimizer settings.
ResolvedConfig default_scenario();

// Canonical JSON of a resolved config; parse_scenario() accepts it back.
nlohmann::json resolved_to_json(ResolvedConfig const& config);

std::string config_digest(ResolvedConfig const& config);

struct FrontEntry {
  Genome genome;
  double cost = 0.0;
  double quality = 0.0;
  bool feasible = false;

  friend bool operator==(FrontEntry const&, FrontEntry const&) = default;
};

struct RunReport {
  std::string digest;
  std::uint64_t seed = 0;
  std::vector<FrontEntry> front;
  Individual best;
  bool best_feasible = false;
  TippingReport tipping;
  double hv = 0.0;
  std::vector<std::optional<double>> generations_trace;
  double wall_time = 0.0;

  friend bool operator==(RunReport const&, RunReport const&) = default;
};

// Hypervolume of the feasible front members, normalized by baseline cost.
double front_hypervolume(std::span<FrontEntry const> front,
                         ScenarioParams const& params,
                         NormalizedPoint ref = kDefaultHvReference);

RunReport make_run_report(RunResult const& result,
                          ScenarioParams const& params,
                          std::string digest,
                          double wall_time);

struct HeuristicComparison {
  double uniform_fraction = 0.3;
  double naive_linear_cost = 0.0;
  double uniform_model_cost = 0.0;
  double ec_mean_best_cost = 0.0;
  // (naive - ec) / naive
  double ec_gain_vs_naive = 0.0;

  friend bool operator==(HeuristicComparison const&,
                         HeuristicComparison const&) = default;
};

HeuristicComparison compare_to_heuristics(ScenarioParams const& params,
                                          double ec_mean_best_cost,
                                          double uniform_fraction = 0.3);

struct BatchSummary {
  std::string digest;
  std::vector<std::uint64_t> seeds;
  double baseline_cost = 0.0;
  MultiRunSummary best_cost;
  MultiRunSummary hypervolume;
  MultiRunSummary team_size;
  HeuristicComparison heuristic;

  friend bool operator==(BatchSummary const&, BatchSummary const&) = default;
};

BatchSummary summarize_runs(std::span<RunReport const> reports,
                            ScenarioParams const& params);

void to_json(nlohmann::json& j, AutomationVector const& v);
void to_json(nlohmann::json& j, Genome const& g);
void to_json(nlohmann::json& j, Individual const& ind);
void to_json(nlohmann::json& j, LaborBreakdown const& b);
void to_json(nlohmann::json& j, TippingReport const& t);
void to_json(nlohmann::json& j, MultiRunSummary const& s);
void to_json(nlohmann::json& j, FrontEntry const& e);
void to_json(nlohmann::json& j, RunReport const& r);
void to_json(nlohmann::json& j, HeuristicComparison const& h);
void to_json(nlohmann::json& j, BatchSummary const& s);

void from_json(nlohmann::json const& j, AutomationVector& v);
void from_json(nlohmann::json const& j, Genome& g);
void from_json(nlohmann::json const& j, Individual& ind);
void from_json(nlohmann::json const& j, TippingReport& t);
void from_json(nlohmann::json const& j, MultiRunSummary& s);
void from_json(nlohmann::json const& j, FrontEntry& e);
void from_json(nlohmann::json const& j, RunReport& r);
void from_json(nlohmann::json const& j, HeuristicComparison& h);
void from_json(nlohmann::json const& j, BatchSummary& s);

// Shortest round-trip decimal form.
std::string format_number(double v);

inline constexpr std::string_view kFrontCsvHeader =
    "f_req,f_design,f_dev,f_test,f_deploy,f_maint,team_size,cost,quality,"
    "feasible";
inline constexpr std::string_view kSweepCsvHeader =
    "beta,alpha,automation_fraction,max_safe_reduction,stable_reduction,"
    "per_person_load,cost";

std::string front_csv(std::span<FrontEntry const> front);
std::string sweep_csv(std::span<SweepCell const> cells);

// Reads (cost, quality) rows from a CSV with a header naming at least
// `cost` and `quality`. When a `feasible` column exists only rows with a
// true value are returned. Throws ParseError on malformed input.
std::vector<ObjectiveVector> read_front_csv(std::string_view text);

std::string read_file(std::filesystem::path const& path);
void write_file(std::filesystem::path const& path, std::string_view content);

} // namespace stackopt
