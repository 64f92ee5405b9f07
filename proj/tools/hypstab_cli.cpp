#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "hypstab/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hypstab: stability functionals and front tracking for 1-D hyperbolic systems"};
  app.require_subcommand(1);

  std::vector<std::string> config_paths;
  std::string out_dir;
  long long seed_override = -1;
  unsigned jobs = 1;

  CLI::App* run = app.add_subcommand("run", "run one or more scenario configs");
  run->add_option("config", config_paths, "scenario config JSON files")->required();
  run->add_option("--out", out_dir, "output directory (default: config value or $HYPSTAB_OUT)");
  run->add_option("--seed", seed_override, "override the config seed");
  run->add_option("--jobs", jobs, "worker count for scenario batches")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (out_dir.empty()) {
    if (const char* env = std::getenv("HYPSTAB_OUT")) out_dir = env;
  }

  std::vector<int> codes(config_paths.size(), 0);
  auto run_one = [&](size_t idx) {
    try {
      hypstab::ScenarioConfig cfg = hypstab::load_config(config_paths[idx]);
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      if (seed_override >= 0) cfg.seed = unsigned(seed_override);
      codes[idx] = hypstab::run_scenario(std::move(cfg));
    } catch (const hypstab::ConfigError& e) {
      std::cerr << config_paths[idx] << ": config error: " << e.what() << "\n";
      codes[idx] = 2;
    } catch (const std::exception& e) {
      std::cerr << config_paths[idx] << ": numerical failure: " << e.what() << "\n";
      codes[idx] = 3;
    }
  };

  if (jobs <= 1 || config_paths.size() <= 1) {
    for (size_t i = 0; i < config_paths.size(); ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < config_paths.size(); i = next.fetch_add(1))
          run_one(i);
      });
    for (std::thread& th : pool) th.join();
  }

  int worst = 0;
  for (int c : codes) worst = std::max(worst, c);
  return worst;
}
