#include "stackopt/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "stackopt/errors.hpp"

namespace stackopt {

using nlohmann::json;

namespace {

  // Strict typed access to one JSON object; every key read is recorded so
  // finish() can reject the rest by path.
  class ObjectReader {
  public:
    ObjectReader(json const* node, std::string path)
        : node_{node}
        , path_{std::move(path)} {
      if (node_ != nullptr && !node_->is_object()) {
        throw ValidationError{path_.empty() ? "<root>" : path_,
                              "expected an object"};
      }
    }

    bool present() const noexcept { return node_ != nullptr; }

    std::string path_of(std::string_view key) const {
      return path_.empty() ? std::string{key}
                           : path_ + "." + std::string{key};
    }

    json const* find(std::string_view key) {
      if (node_ == nullptr) {
        return nullptr;
      }
      auto it = node_->find(std::string{key});
      if (it == node_->end()) {
        return nullptr;
      }
      used_.emplace(key);
      return &*it;
    }

    template<typename T>
    std::optional<T> optional(std::string_view key) {
      auto const* node = find(key);
      if (node == nullptr) {
        return std::nullopt;
      }
      return convert<T>(*node, path_of(key));
    }

    template<typename T>
    T value_or(std::string_view key, T fallback) {
      return optional<T>(key).value_or(std::move(fallback));
    }

    template<typename T>
    T required(std::string_view key) {
      auto v = optional<T>(key);
      if (!v) {
        throw ValidationError{path_of(key), "required field missing"};
      }
      return *std::move(v);
    }

    ObjectReader child(std::string_view key) {
      return ObjectReader{find(key), path_of(key)};
    }

    void finish() const {
      if (node_ == nullptr) {
        return;
      }
      for (auto const& [key, _] : node_->items()) {
        if (!used_.contains(key)) {
          throw ValidationError{path_of(key), "unknown key"};
        }
      }
    }

    template<typename T>
    static T convert(json const& j, std::string const& path) {
      if constexpr (std::is_same_v<T, double>) {
        if (!j.is_number()) {
          throw ValidationError{path, "expected a number"};
        }
        return j.get<double>();
      }
      else if constexpr (std::is_same_v<T, int>) {
        if (!j.is_number_integer()) {
          throw ValidationError{path, "expected an integer"};
        }
        auto v = j.get<std::int64_t>();
        if (j.is_number_unsigned() &&
            j.get<std::uint64_t>() >
                static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
          throw ValidationError{path, "integer out of range"};
        }
        if (v < std::numeric_limits<int>::min() ||
            v > std::numeric_limits<int>::max()) {
          throw ValidationError{path, "integer out of range"};
        }
        return static_cast<int>(v);
      }
      else if constexpr (std::is_same_v<T, std::uint64_t>) {
        if (!j.is_number_unsigned()) {
          throw ValidationError{path, "expected a nonnegative integer"};
        }
        return j.get<std::uint64_t>();
      }
      else if constexpr (std::is_same_v<T, std::string>) {
        if (!j.is_string()) {
          throw ValidationError{path, "expected a string"};
        }
        return j.get<std::string>();
      }
      else {
        if (!j.is_array()) {
          throw ValidationError{path, "expected an array"};
        }
        T out;
        for (std::size_t i = 0; i < j.size(); ++i) {
          out.push_back(convert<typename T::value_type>(
              j[i], path + "[" + std::to_string(i) + "]"));
        }
        return out;
      }
    }

  private:
    json const* node_;
    std::string path_;
    std::set<std::string, std::less<>> used_;
  };

  PhaseMap<double> read_phase_map(ObjectReader& parent,
                                  std::string_view key,
                                  double fallback) {
    auto reader = parent.child(key);
    auto out = PhaseMap<double>::filled(fallback);
    for (auto p : kPhases) {
      out[p] = reader.value_or(key_of(p), fallback);
    }
    reader.finish();
    return out;
  }

  json phase_map_json(PhaseMap<double> const& m) {
    auto j = json::object();
    for (auto p : kPhases) {
      j[std::string{key_of(p)}] = m[p];
    }
    return j;
  }

  std::string qualify_params_field(std::string const& field) {
    for (std::string_view model_key :
         {"ai_time_factor", "oversight_factor", "coord_retention"}) {
      if (field.starts_with(model_key)) {
        return "model." + field;
      }
    }
    return "scenario." + field;
  }

  std::string_view mode_name(SweepMode mode) {
    return mode == SweepMode::fixed_vector ? "fixed_vector" : "reoptimize";
  }

  json optional_number(std::optional<double> v) {
    return v ? json(*v) : json(nullptr);
  }

  std::optional<double> number_or_null(json const& j) {
    if (j.is_null()) {
      return std::nullopt;
    }
    return j.get<double>();
  }

  // Infinite values are stored as null.
  json finite_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
  }

  std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (auto c : text) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
    }
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
      s.remove_suffix(1);
    }
    return s;
  }

  std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
      auto pos = line.find(sep, start);
      if (pos == std::string_view::npos) {
        out.push_back(trim(line.substr(start)));
        break;
      }
      out.push_back(trim(line.substr(start, pos - start)));
      start = pos + 1;
    }
    return out;
  }

} // namespace

ResolvedConfig parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  }
  catch (json::parse_error const& e) {
    throw ParseError{std::string{"malformed scenario: "} + e.what()};
  }

  ObjectReader root{&doc, ""};
  ResolvedConfig out;
  auto& params = out.params;

  {
    auto s = root.child("scenario");
    if (!s.present()) {
      throw ValidationError{"scenario", "required section missing"};
    }
    params.phase_hours = read_phase_map(s, "phase_hours", 0.0);
    params.coord_hours = s.value_or("coord_hours", 0.0);
    params.team_size = s.required<int>("team_size");
    params.capacity_hours = s.required<double>("capacity_hours");
    params.cost_rate = s.required<double>("cost_rate");
    params.stated_base_hours = s.optional<double>("stated_base_hours");
    s.finish();
  }
  {
    auto m = root.child("model");
    params.oversight_factor = m.value_or("oversight_factor", 0.2);
    params.coord_retention = m.value_or("coord_retention", 0.4);
    params.ai_time_factor = read_phase_map(m, "ai_time_factor", 1.0);
    m.finish();
  }
  try {
    params.validate();
  }
  catch (ValidationError const& e) {
    throw ValidationError{qualify_params_field(e.field()), e.reason()};
  }

  auto& config = out.optimizer;
  {
    auto o = root.child("optimizer");
    config.population_size =
        o.value_or("population_size", config.population_size);
    config.generations = o.value_or("generations", config.generations);
    config.crossover_prob = o.value_or("crossover_prob", config.crossover_prob);
    config.mutation_sigma = o.value_or("mutation_sigma", config.mutation_sigma);
    config.real_mutation_prob =
        o.value_or("real_mutation_prob", config.real_mutation_prob);
    config.int_perturb_prob =
        o.value_or("int_perturb_prob", config.int_perturb_prob);
    config.team_min = o.value_or("team_min", config.team_min);
    config.team_max = o.value_or("team_max", config.team_max);
    config.quality_floor = o.value_or("quality_floor", config.quality_floor);

    auto seed = o.optional<std::uint64_t>("seed");
    out.seed_specified = seed.has_value();
    config.seed = seed.value_or(0);

    auto fixed = o.child("fixed_phases");
    for (auto p : kPhases) {
      config.fixed_phases[p] = fixed.optional<double>(key_of(p));
    }
    fixed.finish();

    auto scales = o.child("violation_scales");
    auto& vs = config.violation_scales;
    vs.capacity = scales.value_or("capacity", vs.capacity);
    vs.quality = scales.value_or("quality", vs.quality);
    vs.tipping = scales.value_or("tipping", vs.tipping);
    scales.finish();

    o.finish();
  }
  config.validate();

  {
    auto sw = root.child("sweep");
    if (sw.present()) {
      SweepSpec spec;
      spec.beta_grid = sw.value_or("beta_grid", spec.beta_grid);
      spec.alpha_grid = sw.value_or("alpha_grid", spec.alpha_grid);

      auto mode = sw.value_or<std::string>("mode", "fixed_vector");
      if (mode == "fixed_vector") {
        spec.mode = SweepMode::fixed_vector;
      }
      else if (mode == "reoptimize") {
        spec.mode = SweepMode::reoptimize;
        spec.optimizer = config;
      }
      else {
        throw ValidationError{"sweep.mode",
                              "expected \"fixed_vector\" or \"reoptimize\""};
      }

      if (sw.find("vector") != nullptr) {
        auto fractions = read_phase_map(sw, "vector", 0.0);
        for (auto p : kPhases) {
          if (!(fractions[p] >= 0.0 && fractions[p] <= 1.0)) {
            throw ValidationError{"sweep.vector." + std::string{key_of(p)},
                                  "must lie in [0, 1]"};
          }
        }
        spec.vector = AutomationVector{fractions};
      }
      spec.seeds = sw.value_or("seeds", spec.seeds);
      sw.finish();
      spec.validate();
      out.sweep = std::move(spec);
    }
  }

  root.finish();
  out.digest = config_digest(out);
  return out;
}

ResolvedConfig load_scenario(std::filesystem::path const& path) {
  return parse_scenario(read_file(path));
}

ResolvedConfig default_scenario() {
  ResolvedConfig out;
  out.params = ScenarioParams::paper();
  out.digest = config_digest(out);
  return out;
}

json resolved_to_json(ResolvedConfig const& config) {
  auto const& p = config.params;
  json scenario{
      {"phase_hours", phase_map_json(p.phase_hours)},
      {"coord_hours", p.coord_hours},
      {"team_size", p.team_size},
      {"capacity_hours", p.capacity_hours},
      {"cost_rate", p.cost_rate},
  };
  if (p.stated_base_hours) {
    scenario["stated_base_hours"] = *p.stated_base_hours;
  }

  json model{
      {"oversight_factor", p.oversight_factor},
      {"coord_retention", p.coord_retention},
      {"ai_time_factor", phase_map_json(p.ai_time_factor)},
  };

  auto const& o = config.optimizer;
  auto fixed = json::object();
  for (auto ph : kPhases) {
    if (o.fixed_phases[ph]) {
      fixed[std::string{key_of(ph)}] = *o.fixed_phases[ph];
    }
  }
  json optimizer{
      {"population_size", o.population_size},
      {"generations", o.generations},
      {"crossover_prob", o.crossover_prob},
      {"mutation_sigma", o.mutation_sigma},
      {"real_mutation_prob", o.real_mutation_prob},
      {"int_perturb_prob", o.int_perturb_prob},
      {"team_min", o.team_min},
      {"team_max", o.team_max},
      {"fixed_phases", fixed},
      {"seed", o.seed},
      {"quality_floor", o.quality_floor},
      {"violation_scales",
       {{"capacity", o.violation_scales.capacity},
        {"quality", o.violation_scales.quality},
        {"tipping", o.violation_scales.tipping}}},
  };

  json doc{{"scenario", scenario}, {"model", model}, {"optimizer", optimizer}};
  if (config.sweep) {
    auto const& s = *config.sweep;
    json sweep{
        {"beta_grid", s.beta_grid},
        {"alpha_grid", s.alpha_grid},
        {"mode", mode_name(s.mode)},
        {"seeds", s.seeds},
    };
    if (s.vector) {
      sweep["vector"] = phase_map_json(s.vector->fractions());
    }
    doc["sweep"] = sweep;
  }
  return doc;
}

std::string config_digest(ResolvedConfig const& config) {
  auto doc = resolved_to_json(config);
  doc["optimizer"].erase("seed");
  return fmt::format("{:016x}", fnv1a(doc.dump()));
}

double front_hypervolume(std::span<FrontEntry const> front,
                         ScenarioParams const& params,
                         NormalizedPoint ref) {
  std::vector<ObjectiveVector> points;
  for (auto const& e : front) {
    if (e.feasible) {
      points.push_back({e.cost, e.quality});
    }
  }
  auto normalized = normalize_front(points, baseline_cost(params));
  return hypervolume_2d(normalized, ref);
}

RunReport make_run_report(RunResult const& result,
                          ScenarioParams const& params,
                          std::string digest,
                          double wall_time) {
  RunReport r;
  r.digest = std::move(digest);
  r.seed = result.seed;
  for (auto const& ind : result.front) {
    r.front.push_back({ind.genome, ind.objectives.cost, ind.objectives.quality,
                       ind.feasible()});
  }
  r.best = result.best;
  r.best_feasible = result.best_feasible;
  r.tipping = result.tipping;
  r.hv = front_hypervolume(r.front, params);
  r.generations_trace = result.best_cost_trace;
  r.wall_time = wall_time;
  return r;
}

HeuristicComparison compare_to_heuristics(ScenarioParams const& params,
                                          double ec_mean_best_cost,
                                          double uniform_fraction) {
  HeuristicComparison h;
  h.uniform_fraction = uniform_fraction;
  h.naive_linear_cost = naive_heuristic_cost(params, uniform_fraction);
  h.uniform_model_cost =
      collapsed_labor(params, AutomationVector::uniform(uniform_fraction)).cost;
  h.ec_mean_best_cost = ec_mean_best_cost;
  h.ec_gain_vs_naive = h.naive_linear_cost > 0.0
                           ? relative_cost_gain(h.naive_linear_cost,
                                                ec_mean_best_cost)
                           : 0.0;
  return h;
}

BatchSummary summarize_runs(std::span<RunReport const> reports,
                            ScenarioParams const& params) {
  if (reports.empty()) {
    throw EmptyInput{"no runs to summarize"};
  }
  std::vector<double> costs;
  std::vector<double> hvs;
  std::vector<double> teams;
  BatchSummary s;
  s.digest = reports.front().digest;
  for (auto const& r : reports) {
    s.seeds.push_back(r.seed);
    costs.push_back(r.best.objectives.cost);
    hvs.push_back(r.hv);
    teams.push_back(static_cast<double>(r.best.genome.team_size));
  }
  s.baseline_cost = baseline_cost(params);
  s.best_cost = summarize(costs);
  s.hypervolume = summarize(hvs);
  s.team_size = summarize(teams);
  s.heuristic = compare_to_heuristics(params, s.best_cost.mean);
  return s;
}

void to_json(json& j, AutomationVector const& v) {
  j = phase_map_json(v.fractions());
}

void from_json(json const& j, AutomationVector& v) {
  PhaseMap<double> m;
  for (auto p : kPhases) {
    m[p] = j.at(std::string{key_of(p)}).get<double>();
  }
  v = AutomationVector{m};
}

void to_json(json& j, Genome const& g) {
  j = json{{"automation", g.automation}, {"team_size", g.team_size}};
}

void from_json(json const& j, Genome& g) {
  g.automation = j.at("automation").get<AutomationVector>();
  g.team_size = j.at("team_size").get<int>();
}

void to_json(json& j, Individual const& ind) {
  j = json{
      {"genome", ind.genome},
      {"objectives",
       {{"cost", ind.objectives.cost}, {"quality", ind.objectives.quality}}},
      {"constraints",
       {{"capacity_violation", ind.constraints.capacity_violation},
        {"quality_violation", ind.constraints.quality_violation},
        {"tipping_violation", ind.constraints.tipping_violation},
        {"total_violation", ind.constraints.total_violation}}},
      {"rank", ind.rank},
      {"crowding", finite_or_null(ind.crowding)},
  };
}

void from_json(json const& j, Individual& ind) {
  ind.genome = j.at("genome").get<Genome>();
  auto const& obj = j.at("objectives");
  ind.objectives = {obj.at("cost").get<double>(),
                    obj.at("quality").get<double>()};
  auto const& c = j.at("constraints");
  ind.constraints = {c.at("capacity_violation").get<double>(),
                     c.at("quality_violation").get<double>(),
                     c.at("tipping_violation").get<double>(),
                     c.at("total_violation").get<double>()};
  ind.rank = j.at("rank").get<std::size_t>();
  ind.crowding = number_or_null(j.at("crowding"))
                     .value_or(std::numeric_limits<double>::infinity());
}

void to_json(json& j, LaborBreakdown const& b) {
  j = json{
      {"human_hours", phase_map_json(b.human_hours)},
      {"oversight_hours", phase_map_json(b.oversight_hours)},
      {"coord_hours_residual", b.coord_hours_residual},
      {"total_hours", b.total_hours},
      {"cost", b.cost},
      {"labor_saved", b.labor_saved},
      {"automation_fraction", b.automation_fraction},
  };
}

void to_json(json& j, TippingReport const& t) {
  j = json{
      {"fte_absorbed", t.fte_absorbed},
      {"tipping_reached", t.tipping_reached},
      {"max_safe_reduction", t.max_safe_reduction},
      {"stable_reduction", t.stable_reduction},
      {"per_person_load_after", t.per_person_load_after},
  };
}

void from_json(json const& j, TippingReport& t) {
  t.fte_absorbed = j.at("fte_absorbed").get<double>();
  t.tipping_reached = j.at("tipping_reached").get<bool>();
  t.max_safe_reduction = j.at("max_safe_reduction").get<int>();
  t.stable_reduction = j.at("stable_reduction").get<int>();
  t.per_person_load_after = j.at("per_person_load_after").get<double>();
}

void to_json(json& j, MultiRunSummary const& s) {
  j = json{{"values", s.values}, {"mean", s.mean}, {"std", s.std},
           {"min", s.min},       {"max", s.max}};
}

void from_json(json const& j, MultiRunSummary& s) {
  s.values = j.at("values").get<std::vector<double>>();
  s.mean = j.at("mean").get<double>();
  s.std = j.at("std").get<double>();
  s.min = j.at("min").get<double>();
  s.max = j.at("max").get<double>();
}

void to_json(json& j, FrontEntry const& e) {
  j = json{{"genome", e.genome},
           {"cost", e.cost},
           {"quality", e.quality},
           {"feasible", e.feasible}};
}

void from_json(json const& j, FrontEntry& e) {
  e.genome = j.at("genome").get<Genome>();
  e.cost = j.at("cost").get<double>();
  e.quality = j.at("quality").get<double>();
  e.feasible = j.at("feasible").get<bool>();
}

void to_json(json& j, RunReport const& r) {
  auto trace = json::array();
  for (auto const& v : r.generations_trace) {
    trace.push_back(optional_number(v));
  }
  j = json{
      {"digest", r.digest},
      {"seed", r.seed},
      {"front", r.front},
      {"best", r.best},
      {"best_feasible", r.best_feasible},
      {"tipping", r.tipping},
      {"hv", r.hv},
      {"generations_trace", trace},
      {"wall_time", r.wall_time},
  };
}

void from_json(json const& j, RunReport& r) {
  r.digest = j.at("digest").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.front = j.at("front").get<std::vector<FrontEntry>>();
  r.best = j.at("best").get<Individual>();
  r.best_feasible = j.at("best_feasible").get<bool>();
  r.tipping = j.at("tipping").get<TippingReport>();
  r.hv = j.at("hv").get<double>();
  r.generations_trace.clear();
  for (auto const& v : j.at("generations_trace")) {
    r.generations_trace.push_back(number_or_null(v));
  }
  r.wall_time = j.at("wall_time").get<double>();
}

void to_json(json& j, HeuristicComparison const& h) {
  j = json{
      {"uniform_fraction", h.uniform_fraction},
      {"naive_linear_cost", h.naive_linear_cost},
      {"uniform_model_cost", h.uniform_model_cost},
      {"ec_mean_best_cost", h.ec_mean_best_cost},
      {"ec_gain_vs_naive", h.ec_gain_vs_naive},
  };
}

void from_json(json const& j, HeuristicComparison& h) {
  h.uniform_fraction = j.at("uniform_fraction").get<double>();
  h.naive_linear_cost = j.at("naive_linear_cost").get<double>();
  h.uniform_model_cost = j.at("uniform_model_cost").get<double>();
  h.ec_mean_best_cost = j.at("ec_mean_best_cost").get<double>();
  h.ec_gain_vs_naive = j.at("ec_gain_vs_naive").get<double>();
}

void to_json(json& j, BatchSummary const& s) {
  j = json{
      {"digest", s.digest},
      {"runs", s.seeds.size()},
      {"seeds", s.seeds},
      {"baseline_cost", s.baseline_cost},
      {"best_cost", s.best_cost},
      {"hypervolume", s.hypervolume},
      {"team_size", s.team_size},
      {"heuristic", s.heuristic},
  };
}

void from_json(json const& j, BatchSummary& s) {
  s.digest = j.at("digest").get<std::string>();
  s.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  s.baseline_cost = j.at("baseline_cost").get<double>();
  s.best_cost = j.at("best_cost").get<MultiRunSummary>();
  s.hypervolume = j.at("hypervolume").get<MultiRunSummary>();
  s.team_size = j.at("team_size").get<MultiRunSummary>();
  s.heuristic = j.at("heuristic").get<HeuristicComparison>();
}

std::string format_number(double v) { return fmt::format("{}", v); }

std::string front_csv(std::span<FrontEntry const> front) {
  std::string out{kFrontCsvHeader};
  out += '\n';
  for (auto const& e : front) {
    for (auto p : kPhases) {
      out += format_number(e.genome.automation[p]);
      out += ',';
    }
    out += fmt::format("{},{},{},{}\n", e.genome.team_size,
                       format_number(e.cost), format_number(e.quality),
                       e.feasible ? 1 : 0);
  }
  return out;
}

std::string sweep_csv(std::span<SweepCell const> cells) {
  std::string out{kSweepCsvHeader};
  out += '\n';
  for (auto const& c : cells) {
    out += fmt::format("{},{},{},{},{},{},{}\n", format_number(c.beta),
                       format_number(c.alpha),
                       format_number(c.automation_fraction),
                       c.max_safe_reduction, c.stable_reduction,
                       format_number(c.per_person_load),
                       format_number(c.cost));
  }
  return out;
}

std::vector<ObjectiveVector> read_front_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    if (!line.empty()) {
      lines.push_back(line);
    }
  }
  if (lines.empty()) {
    throw ParseError{"front CSV: missing header"};
  }

  auto header = split(lines.front(), ',');
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  };
  auto cost_col = column("cost");
  auto quality_col = column("quality");
  auto feasible_col = column("feasible");
  if (!cost_col || !quality_col) {
    throw ParseError{"front CSV: header must contain cost and quality"};
  }

  auto parse_double = [](std::string_view field, std::size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError{fmt::format("front CSV line {}: '{}' is not a number",
                                   line_no, field)};
    }
    return v;
  };

  std::vector<ObjectiveVector> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto line_no = i + 1;
    auto fields = split(lines[i], ',');
    if (fields.size() != header.size()) {
      throw ParseError{fmt::format("front CSV line {}: expected {} fields, got {}",
                                   line_no, header.size(), fields.size())};
    }
    if (feasible_col) {
      auto flag = fields[*feasible_col];
      if (flag == "0" || flag == "false") {
        continue;
      }
      if (flag != "1" && flag != "true") {
        throw ParseError{fmt::format(
            "front CSV line {}: feasible must be 0/1 or true/false", line_no)};
      }
    }
    out.push_back({parse_double(fields[*cost_col], line_no),
                   parse_double(fields[*quality_col], line_no)});
  }
  return out;
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in{path, std::ios::binary};
  if (!in) {
    throw IoError{"cannot read " + path.string()};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(std::filesystem::path const& path, std::string_view content) {
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  if (!out) {
    throw IoError{"cannot write " + path.string()};
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw IoError{"failed writing " + path.string()};
  }
}

} // namespace stackopt
