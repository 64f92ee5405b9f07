#include "hypstab/calibrate.hpp"

#include <algorithm>
#include <cmath>

#include "hypstab/generators.hpp"
#include "hypstab/riemann.hpp"

namespace hypstab {

CalibrationResult calibrate_constants(const FluxModel& model, double delta, unsigned seed,
                                      int sweeps) {
  Rng rng(seed);
  std::uniform_int_distribution<int> fam(0, model.n - 1);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  const double amp = 0.5 * delta;

  double max_ratio_v = 0.0;    // strength growth per unit of Q decrease
  double max_ratio_chg = 0.0;  // strength redistribution per unit of Q decrease
  int used = 0;

  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const int i = fam(rng), j = fam(rng);
    double sp = amp * sym(rng);  // left wave, family i
    double sq = amp * sym(rng);  // right wave, family j
    const bool approaching =
        i > j ||
        (i == j && model.field_kind[i] == FieldKind::GNL && std::min(sp, sq) < 0.0);
    if (!approaching || std::abs(sp * sq) < 1e-8) continue;

    Vec u_l = random_state(model, rng, 0.4);
    Vec u_m, u_r, sigma_out;
    try {
      u_m = lax_point(model, i, sp, u_l);
      u_r = lax_point(model, j, sq, u_m);
      sigma_out = solve_strengths(model, u_l, u_r);
    } catch (const std::runtime_error&) {
      continue;  // sample left the domain or failed to invert; skip it
    }

    Vec sigma_in = Vec::Zero(model.n);
    sigma_in[i] += sp;
    sigma_in[j] += sq;

    const double q_in = std::abs(sp * sq);
    const double dv = sigma_out.cwiseAbs().sum() - sigma_in.cwiseAbs().sum();
    const double change = (sigma_out - sigma_in).cwiseAbs().sum();
    max_ratio_v = std::max(max_ratio_v, std::max(dv, 0.0) / q_in);
    max_ratio_chg = std::max(max_ratio_chg, change / q_in);
    ++used;
  }

  CalibrationResult res;
  res.C0 = std::max(1.0, 2.0 * max_ratio_v);
  res.kappa2 = std::max(1.0, 2.0 * max_ratio_chg);
  res.max_amplification = max_ratio_chg;
  res.interactions = used;
  return res;
}

}  // namespace hypstab
