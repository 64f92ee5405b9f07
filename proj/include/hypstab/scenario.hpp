#ifndef HYPSTAB_SCENARIO_HPP
#define HYPSTAB_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypstab/io.hpp"

namespace hypstab {

enum class Task { Functionals, PhiPair, Evolve, ApproxStudy, Calibrate, Acceptance };

struct ScenarioConfig {
  FluxModel model;
  StabilityConstants consts;
  Task task = Task::Functionals;
  std::optional<PiecewiseConstantFn> initial;
  std::optional<PiecewiseConstantFn> initial_tilde;
  std::optional<BVFunction> initial_bv;
  std::vector<double> eps_list{0.01};
  double T = 1.0;
  std::vector<double> sample_times;
  std::vector<int> nu_list{10, 20, 40, 80};
  unsigned seed = 1;
  std::string out_dir = ".";
  Json raw;  // config echo for the manifest
};

ScenarioConfig load_config(const std::string& path);

/// Applies generator specs and overrides, then dispatches the task.
/// Returns the process exit code (0 ok, 1 criterion failure).
int run_scenario(ScenarioConfig cfg);

extern const char* const kVersion;

}  // namespace hypstab

#endif
