#ifndef HYPSTAB_CALIBRATE_HPP
#define HYPSTAB_CALIBRATE_HPP

#include "hypstab/pcw.hpp"

namespace hypstab {

struct CalibrationResult {
  double C0;
  double kappa2;
  double max_amplification;  // worst observed strength growth / Q decrease
  int interactions;          // number of approaching pairs swept
};

/// Sweeps seeded pairwise wave interactions at amplitude ~ delta and returns
/// constants satisfying the interaction decrease inequalities on the sweep
/// with a factor-2 margin.
CalibrationResult calibrate_constants(const FluxModel& model, double delta, unsigned seed,
                                      int sweeps = 2000);

}  // namespace hypstab

#endif
