#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "stackopt/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = stackopt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(std::string const& name) {
  auto dir = fs::temp_directory_path() / ("stackopt_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(fs::path const& path) {
  std::ifstream in{path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string const kPaperConfig = std::string{STACKOPT_SCENARIO_DIR} + "/paper.json";

} // namespace

TEST_CASE("evaluate at zero automation reproduces the baseline") {
  auto r = invoke({"--format", "json", "evaluate"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["breakdown"]["total_hours"].get<double>() == doctest::Approx(2500.0));
  CHECK(doc["breakdown"]["cost"].get<double>() == doctest::Approx(187500.0));
  // 2500 of the stated 2700 hours: f = 0.074, so one FTE is already spare.
  CHECK(doc["tipping"]["max_safe_reduction"] == 1);
}

TEST_CASE("evaluate with per-phase fractions") {
  auto r = invoke({"--config", kPaperConfig, "--format", "json", "evaluate",
                   "--f-test", "0.7", "--f-dev", "0.5"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["quality_ratio"].get<double>() == doctest::Approx(0.55));
  CHECK(doc["automation"]["dev"] == 0.5);

  auto table = invoke({"evaluate", "--f-dev", "0.5"});
  CHECK(table.code == 0);
  CHECK(table.out.find("total_hours") != std::string::npos);
}

TEST_CASE("evaluate rejects out-of-range fractions") {
  CHECK(invoke({"evaluate", "--f-dev", "1.5"}).code == 1);
  CHECK(invoke({"evaluate", "--bogus"}).code == 1);
  CHECK(invoke({"--config", "/nonexistent.json", "evaluate"}).code == 2);
  CHECK(invoke({}).code == 1);
}

TEST_CASE("tipping from a scalar fraction") {
  auto tip = [](std::string f) {
    auto r = invoke({"--format", "json", "tipping", "--fraction", f});
    REQUIRE(r.code == 0);
    return json::parse(r.out);
  };
  CHECK(tip("0.501")["max_safe_reduction"] == 10);
  auto quarter = tip("0.252");
  CHECK(quarter["max_safe_reduction"] == 5);
  CHECK(quarter["fte_absorbed"].get<double>() == doctest::Approx(5.04));
  auto none = tip("0");
  CHECK(none["max_safe_reduction"] == 0);
  CHECK(none["tipping_reached"] == false);

  auto small = invoke({"--format", "json", "tipping", "--fraction", "0.9",
                       "--team-size", "5"});
  REQUIRE(small.code == 0);
  CHECK(json::parse(small.out)["max_safe_reduction"] == 4);
}

TEST_CASE("tipping argument conflicts are usage errors") {
  auto r = invoke({"tipping", "--fraction", "0.5", "--f-dev", "0.2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--fraction") != std::string::npos);
  CHECK(invoke({"tipping"}).code == 1);
  CHECK(invoke({"tipping", "--fraction", "0.5", "--team-size", "0"}).code == 1);
}

TEST_CASE("optimize writes reproducible artifacts") {
  auto a = scratch_dir("opt_a");
  auto b = scratch_dir("opt_b");
  std::vector<std::string> common{"--config", kPaperConfig, "--seed", "3",
                                  "--runs", "2", "optimize"};
  auto with_out = [&](fs::path const& dir) {
    auto args = common;
    args.insert(args.begin(), {"--out", dir.string()});
    return invoke(args);
  };
  auto ra = with_out(a);
  auto rb = with_out(b);
  REQUIRE(ra.code == 0);
  REQUIRE(rb.code == 0);

  for (auto name : {"run_0.json", "run_1.json", "front_0.csv", "front_1.csv",
                    "summary.json"}) {
    CHECK(fs::exists(a / name));
  }

  auto strip = [](json doc) {
    doc.erase("wall_time");
    return doc;
  };
  auto ja = json::parse(slurp(a / "run_0.json"));
  auto jb = json::parse(slurp(b / "run_0.json"));
  CHECK(strip(ja) == strip(jb));
  CHECK(ja["seed"] == 3);
  CHECK(json::parse(slurp(a / "run_1.json"))["seed"] == 4);
  CHECK(ja["generations_trace"].size() == 101);
  CHECK(slurp(a / "front_0.csv") == slurp(b / "front_0.csv"));
  CHECK(slurp(a / "front_0.csv").starts_with(stackopt::kFrontCsvHeader));

  auto summary = json::parse(slurp(a / "summary.json"));
  CHECK(summary["runs"] == 2);
  CHECK(summary["heuristic"]["naive_linear_cost"].get<double>() ==
        doctest::Approx(141750.0));
  CHECK(summary["digest"] == ja["digest"]);

  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("optimize requires an output directory") {
  CHECK(invoke({"--seed", "1", "optimize"}).code == 1);
  CHECK(invoke({"--seed", "1", "--runs", "0", "--out", "x", "optimize"}).code == 1);
}

TEST_CASE("sweep writes the default grid") {
  auto dir = scratch_dir("sweep");
  auto r = invoke({"--out", dir.string(), "sweep"});
  REQUIRE(r.code == 0);
  auto csv = slurp(dir / "sweep.csv");
  std::istringstream lines{csv};
  std::string line;
  std::getline(lines, line);
  CHECK(line == stackopt::kSweepCsvHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
  }
  CHECK(rows == 35);

  auto custom = invoke({"--out", dir.string(), "sweep", "--beta-grid",
                        "0.1,0.2", "--alpha-grid", "0.3"});
  REQUIRE(custom.code == 0);
  CHECK(slurp(dir / "sweep.csv").starts_with(
      std::string{stackopt::kSweepCsvHeader} + "\n0.1,0.3,"));

  CHECK(invoke({"--out", dir.string(), "sweep", "--beta-grid", "0.3,0.1"}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("hv of a front file") {
  auto dir = scratch_dir("hv");
  auto front = dir / "front.csv";
  {
    std::ofstream f{front};
    f << "cost,quality\n40500,0.2\n121500,0.7\n";
  }
  auto r = invoke({"--format", "json", "hv", front.string(), "--c-base", "202500"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["hv"].get<double>() == doctest::Approx(0.43 / 1.1));

  // The default base comes from the scenario, which is the same here.
  auto dflt = invoke({"hv", front.string()});
  REQUIRE(dflt.code == 0);
  CHECK(std::stod(dflt.out) == doctest::Approx(0.43 / 1.1));

  {
    std::ofstream f{front};
    f << "cost,quality\n";
  }
  auto empty = invoke({"hv", front.string()});
  REQUIRE(empty.code == 0);
  CHECK(std::stod(empty.out) == 0.0);

  {
    std::ofstream f{front};
    f << "cost,quality\n1,oops\n";
  }
  CHECK(invoke({"hv", front.string()}).code == 1);
  CHECK(invoke({"hv", (dir / "missing.csv").string()}).code == 2);
  CHECK(invoke({"hv", front.string(), "--ref", "1"}).code == 1);
  fs::remove_all(dir);
}
