#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hypstab/io.hpp"
#include "hypstab/scenario.hpp"

using namespace hypstab;
namespace fs = std::filesystem;

namespace {
Vec scalar(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}

fs::path temp_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("hypstab_test_" + tag);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("format_double round trips bit-exactly") {
  for (double x : {0.1, 1.0 / 3.0, 1e-17, -2.5e300, 0.0, 6.02e23, -1234.5678901234567}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("step function json round trip") {
  PiecewiseConstantFn u;
  u.xs = {0.0, 0.5, 2.0};
  u.values = {scalar(-0.1), scalar(0.25)};
  u.background = scalar(0.0);
  PiecewiseConstantFn back = pcw_from_json(to_json(u));
  CHECK(back.xs == u.xs);
  REQUIRE(back.values.size() == 2);
  CHECK(back.values[0][0] == -0.1);
  CHECK(back.values[1][0] == 0.25);
  CHECK(back.background[0] == 0.0);
}

TEST_CASE("json validation rejects malformed input") {
  CHECK_THROWS_AS(pcw_from_json(Json{{"background", {0.0}},
                                     {"breakpoints", {1.0, 0.0}},
                                     {"values", {{0.1}}}}),
                  ConfigError);
  CHECK_THROWS_AS(pcw_from_json(Json{{"background", {0.0}},
                                     {"breakpoints", {0.0, 1.0, 2.0}},
                                     {"values", {{0.1}}}}),
                  ConfigError);
  CHECK_THROWS_AS(vec_from_json(Json{{"not", "an array"}}), ConfigError);
  CHECK_THROWS_AS(bv_from_json(Json{{"background", {0.0}},
                                    {"pieces",
                                     {{{"a", 1.0}, {"b", 0.0}, {"value", {0.1}},
                                       {"slope", {0.0}}}}}}),
                  ConfigError);
}

TEST_CASE("csv writer is deterministic") {
  fs::path dir = temp_dir("csv");
  fs::path file = dir / "out.csv";
  write_csv(file.string(), {"a", "b"}, {{1.0, 0.5}, {-2.0, 1.0 / 3.0}});
  CHECK(slurp(file) == "a,b\n1,0.5\n-2,0.33333333333333331\n");
  fs::remove_all(dir);
}

TEST_CASE("config loader validation") {
  fs::path dir = temp_dir("cfg");
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(dir / name);
    out << body;
    return (dir / name).string();
  };
  CHECK_THROWS_AS(load_config((dir / "missing.json").string()), ConfigError);
  CHECK_THROWS_AS(load_config(write("bad.json", "{not json")), ConfigError);
  CHECK_THROWS_AS(load_config(write("nomodel.json", R"({"task":"evolve"})")), ConfigError);
  CHECK_THROWS_AS(
      load_config(write("badtask.json", R"({"model":{"id":"burgers"},"task":"what"})")),
      ConfigError);
  CHECK_THROWS_AS(
      load_config(write("badmodel.json", R"({"model":{"id":"kdv"}})")), ConfigError);

  ScenarioConfig ok = load_config(write("ok.json", R"({
    "model": {"id": "p_system", "gamma": 1.4},
    "task": "evolve",
    "initial": {"background": [1.0, 0.0], "breakpoints": [0.0, 1.0],
                "values": [[1.05, 0.0]]},
    "eps": [0.02], "T": 0.5, "seed": 3
  })"));
  CHECK(ok.model.id == "p_system");
  CHECK(ok.task == Task::Evolve);
  CHECK(ok.T == 0.5);
  CHECK(ok.seed == 3);
  REQUIRE(ok.initial.has_value());
  CHECK(ok.initial->xs.size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("cli end to end") {
  if (!fs::exists("hypstab")) return;  // only when run next to the binary
  fs::path dir = temp_dir("cli");
  {
    std::ofstream out(dir / "cfg.json");
    out << R"({
      "model": {"id": "burgers"},
      "task": "functionals",
      "initial": {"background": [0.0], "breakpoints": [0.0, 1.0], "values": [[-0.1]]},
      "out": ")" << (dir / "out").string() << R"("
    })";
  }
  const std::string cmd = "./hypstab run " + (dir / "cfg.json").string();
  CHECK(std::system(cmd.c_str()) == 0);
  REQUIRE(fs::exists(dir / "out" / "results.csv"));
  REQUIRE(fs::exists(dir / "out" / "manifest.json"));

  std::istringstream csv(slurp(dir / "out" / "results.csv"));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  CHECK(header == "V,Q,Upsilon,Q_hat");
  std::istringstream cells(row);
  std::string cell;
  std::getline(cells, cell, ',');
  CHECK(std::stod(cell) == doctest::Approx(0.2).epsilon(1e-10));
  std::getline(cells, cell, ',');
  CHECK(std::stod(cell) == doctest::Approx(0.01).epsilon(1e-9));

  Json manifest = Json::parse(slurp(dir / "out" / "manifest.json"));
  CHECK(manifest.at("version").get<std::string>() == kVersion);
  fs::remove_all(dir);
}
