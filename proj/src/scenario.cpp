#include "hypstab/scenario.hpp"

#include <filesystem>
#include <fstream>

#include "hypstab/acceptance.hpp"
#include "hypstab/calibrate.hpp"
#include "hypstab/front_tracking.hpp"
#include "hypstab/generators.hpp"

namespace hypstab {

const char* const kVersion = "1.0.0";

namespace {

namespace fs = std::filesystem;

FluxModel model_from_json(const Json& j) {
  const std::string id = j.at("id").get<std::string>();
  FluxModel model;
  if (id == "burgers") {
    model = burgers_model(j.value("radius", 0.5));
  } else if (id == "p_system") {
    model = p_system_model(j.value("gamma", 1.4), j.value("radius", 0.2));
  } else if (id == "linear") {
    if (!j.contains("matrix")) throw ConfigError("linear model needs a matrix");
    const Json& mj = j.at("matrix");
    const int n = int(mj.size());
    Mat A(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) A(r, c) = mj[r][c].get<double>();
    model = linear_model(A, j.value("radius", 0.5));
  } else {
    throw ConfigError("unknown model id: " + id);
  }
  if (j.contains("k")) {
    Vec k = vec_from_json(j.at("k"));
    if (k.size() != model.n) throw ConfigError("k must have one entry per family");
    for (int i = 0; i < model.n; ++i)
      if (!(k[i] > 0.0)) throw ConfigError("k entries must be positive");
    model.k = k;
  }
  return model;
}

Task task_from_string(const std::string& s) {
  if (s == "functionals") return Task::Functionals;
  if (s == "phi-pair") return Task::PhiPair;
  if (s == "evolve") return Task::Evolve;
  if (s == "approx-study") return Task::ApproxStudy;
  if (s == "calibrate") return Task::Calibrate;
  if (s == "acceptance") return Task::Acceptance;
  throw ConfigError("unknown task: " + s);
}

PiecewiseConstantFn resolve_initial(const Json& j, const FluxModel& model, unsigned seed) {
  if (j.contains("generator")) {
    const Json& g = j.at("generator");
    if (!g.contains("seed") && seed == 0)
      throw ConfigError("generator specs require a seed");
    Rng rng(g.value("seed", seed));
    return random_step_function(model, rng, g.value("jumps", 4), g.value("amplitude", 0.01));
  }
  PiecewiseConstantFn u = pcw_from_json(j);
  if (u.background.size() != model.n) throw ConfigError("initial data dimension mismatch");
  return u;
}

void write_manifest(const ScenarioConfig& cfg, const Json& fitted) {
  Json m;
  m["config"] = cfg.raw;
  m["version"] = kVersion;
  m["seed"] = cfg.seed;
  m["constants"] = {{"C0", cfg.consts.C0},
                    {"kappa1", cfg.consts.kappa1},
                    {"kappa2", cfg.consts.kappa2},
                    {"delta", cfg.consts.delta}};
  m["fitted"] = fitted;
  std::ofstream out(fs::path(cfg.out_dir) / "manifest.json");
  out << m.dump(2) << "\n";
}

int run_functionals(const ScenarioConfig& cfg) {
  PiecewiseConstantFn u = cfg.initial.value_or(PiecewiseConstantFn::constant(cfg.model.origin));
  JumpTable table = jump_strengths(cfg.model, u);
  const double v = linear_functional(table);
  const double q = interaction_potential(cfg.model, table);
  const double ups = v + cfg.consts.C0 * q;
  const double qh =
      interaction_measure(cfg.model, wave_measures(cfg.model, BVFunction::from_pcw(u)));
  write_csv((fs::path(cfg.out_dir) / "results.csv").string(), {"V", "Q", "Upsilon", "Q_hat"},
            {{v, q, ups, qh}});
  write_manifest(cfg, Json::object());
  if (ups >= cfg.consts.delta) return 0;  // reported, not an error
  return 0;
}

int run_phi_pair(const ScenarioConfig& cfg) {
  if (!cfg.initial || !cfg.initial_tilde)
    throw ConfigError("phi-pair needs `initial` and `initial_tilde`");
  const PiecewiseConstantFn& v = *cfg.initial;
  const PiecewiseConstantFn& vt = *cfg.initial_tilde;
  const double phi = stability_phi(cfg.model, v, vt, cfg.consts);
  const double xh = xi_hat(cfg.model, BVFunction::from_pcw(v), BVFunction::from_pcw(vt),
                           cfg.consts);
  const double l1 = l1_distance(v, vt);
  write_csv((fs::path(cfg.out_dir) / "results.csv").string(), {"Phi", "Xi_hat", "L1"},
            {{phi, xh, l1}});
  write_manifest(cfg, Json::object());
  return 0;
}

int run_evolve(const ScenarioConfig& cfg) {
  if (!cfg.initial) throw ConfigError("evolve needs `initial`");
  std::vector<std::vector<double>> rows;
  for (double eps : cfg.eps_list) {
    FTTrajectory traj = ft_solve(cfg.model, *cfg.initial, eps, cfg.T, cfg.consts);
    {
      std::ofstream out(fs::path(cfg.out_dir) /
                        ("events_eps" + format_double(eps) + ".json"));
      out << event_log_json(traj).dump(2) << "\n";
    }
    std::vector<double> times = cfg.sample_times;
    if (times.empty()) times = {0.0, cfg.T};
    for (double t : times) {
      PiecewiseConstantFn snap = snapshot(traj, t);
      write_snapshot_csv((fs::path(cfg.out_dir) /
                          ("snapshot_eps" + format_double(eps) + "_t" + format_double(t) + ".csv"))
                             .string(),
                         snap);
      std::vector<Front> fronts = traj.fronts_at(t);
      rows.push_back({eps, t, front_V(fronts), front_Q(cfg.model, fronts),
                      front_upsilon(cfg.model, fronts, cfg.consts), np_total_strength(fronts)});
    }
  }
  write_csv((fs::path(cfg.out_dir) / "results.csv").string(),
            {"eps", "t", "V", "Q", "Upsilon", "np_total"}, rows);
  write_manifest(cfg, Json::object());
  return 0;
}

int run_approx_study(const ScenarioConfig& cfg) {
  BVFunction u;
  if (cfg.initial_bv) {
    u = *cfg.initial_bv;
  } else if (cfg.initial) {
    u = BVFunction::from_pcw(*cfg.initial);
  } else {
    throw ConfigError("approx-study needs `initial` or `initial_bv`");
  }
  const double q_u = interaction_measure(cfg.model, wave_measures(cfg.model, u));
  std::vector<std::vector<double>> rows;
  for (int nu : cfg.nu_list) {
    PiecewiseConstantFn v = approx_sequence(cfg.model, u, nu);
    const double q_v =
        interaction_measure(cfg.model, wave_measures(cfg.model, BVFunction::from_pcw(v)));
    BVFunction vb = BVFunction::from_pcw(v);
    rows.push_back({double(nu), q_v, std::abs(q_v - q_u), l1_distance(u, vb)});
  }
  write_csv((fs::path(cfg.out_dir) / "results.csv").string(),
            {"nu", "Q_hat_nu", "Q_hat_err", "L1_err"}, rows);
  write_manifest(cfg, {{"Q_hat", q_u}});
  return 0;
}

int run_calibrate(const ScenarioConfig& cfg) {
  CalibrationResult cal = calibrate_constants(cfg.model, cfg.consts.delta, cfg.seed);
  Json out = {{"C0", cal.C0},
              {"kappa2", cal.kappa2},
              {"max_amplification", cal.max_amplification},
              {"interactions", cal.interactions}};
  std::ofstream f(fs::path(cfg.out_dir) / "constants.json");
  f << out.dump(2) << "\n";
  write_csv((fs::path(cfg.out_dir) / "results.csv").string(),
            {"C0", "kappa2", "max_amplification", "interactions"},
            {{cal.C0, cal.kappa2, cal.max_amplification, double(cal.interactions)}});
  write_manifest(cfg, out);
  return 0;
}

int run_acceptance_task(const ScenarioConfig& cfg) {
  AcceptanceReport report = run_acceptance(cfg.seed);
  Json j = Json::array();
  std::vector<std::vector<double>> rows;
  for (const CriterionResult& c : report.criteria) {
    j.push_back({{"criterion", c.id},
                 {"name", c.name},
                 {"measured", c.measured},
                 {"bound", c.bound},
                 {"pass", c.pass},
                 {"detail", c.detail}});
    rows.push_back({double(c.id), c.measured, c.bound, c.pass ? 1.0 : 0.0});
  }
  {
    std::ofstream out(fs::path(cfg.out_dir) / "acceptance.json");
    out << j.dump(2) << "\n";
  }
  write_csv((fs::path(cfg.out_dir) / "results.csv").string(),
            {"criterion", "measured", "bound", "pass"}, rows);
  write_manifest(cfg, {{"C0_burgers", report.consts_burgers.C0},
                       {"kappa2_burgers", report.consts_burgers.kappa2},
                       {"C0_p_system", report.consts_p_system.C0},
                       {"kappa2_p_system", report.consts_p_system.kappa2}});
  return report.all_pass() ? 0 : 1;
}

}  // namespace

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }

  ScenarioConfig cfg;
  cfg.raw = j;
  try {
    cfg.model = model_from_json(j.at("model"));
    cfg.task = task_from_string(j.value("task", "functionals"));
    if (j.contains("constants")) {
      const Json& c = j.at("constants");
      cfg.consts.C0 = c.value("C0", cfg.consts.C0);
      cfg.consts.kappa1 = c.value("kappa1", cfg.consts.kappa1);
      cfg.consts.kappa2 = c.value("kappa2", cfg.consts.kappa2);
      cfg.consts.delta = c.value("delta", cfg.consts.delta);
    }
    cfg.seed = j.value("seed", 1u);
    if (j.contains("initial")) cfg.initial = resolve_initial(j.at("initial"), cfg.model, cfg.seed);
    if (j.contains("initial_tilde"))
      cfg.initial_tilde = resolve_initial(j.at("initial_tilde"), cfg.model, cfg.seed + 1);
    if (j.contains("initial_bv")) cfg.initial_bv = bv_from_json(j.at("initial_bv"));
    if (j.contains("eps")) cfg.eps_list = j.at("eps").get<std::vector<double>>();
    cfg.T = j.value("T", 1.0);
    if (j.contains("sample_times"))
      cfg.sample_times = j.at("sample_times").get<std::vector<double>>();
    if (j.contains("nu")) cfg.nu_list = j.at("nu").get<std::vector<int>>();
    if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  return cfg;
}

int run_scenario(ScenarioConfig cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  switch (cfg.task) {
    case Task::Functionals: return run_functionals(cfg);
    case Task::PhiPair: return run_phi_pair(cfg);
    case Task::Evolve: return run_evolve(cfg);
    case Task::ApproxStudy: return run_approx_study(cfg);
    case Task::Calibrate: return run_calibrate(cfg);
    case Task::Acceptance: return run_acceptance_task(cfg);
  }
  throw ConfigError("unhandled task");
}

}  // namespace hypstab
