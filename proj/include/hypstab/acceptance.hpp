#ifndef HYPSTAB_ACCEPTANCE_HPP
#define HYPSTAB_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "hypstab/pcw.hpp"

namespace hypstab {

struct CriterionResult {
  int id;
  std::string name;
  double measured;
  double bound;
  bool pass;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  StabilityConstants consts_burgers;
  StabilityConstants consts_p_system;
  bool all_pass() const;
};

/// Runs the full acceptance battery with the given seed. Deterministic.
AcceptanceReport run_acceptance(unsigned seed);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hypstab

#endif
