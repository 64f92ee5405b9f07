#ifndef HYPSTAB_PCW_HPP
#define HYPSTAB_PCW_HPP

#include <vector>

#include "hypstab/flux_model.hpp"

namespace hypstab {

/// Right-continuous compactly supported step function: value values[a] on
/// [xs[a], xs[a+1]) and `background` outside [xs.front(), xs.back()).
struct PiecewiseConstantFn {
  std::vector<double> xs;
  std::vector<Vec> values;
  Vec background;

  static PiecewiseConstantFn constant(const Vec& bg) {
    PiecewiseConstantFn f;
    f.background = bg;
    return f;
  }

  bool empty() const { return values.empty(); }
  Vec at(double x) const;
  Vec left_limit(double x) const;
  std::vector<double> jump_points() const;

  /// Merge adjacent equal values (within tol) and trim plateaus equal to the
  /// background, so the jump set is finite and stable.
  void canonicalize(double tol = 1e-14);
};

double l1_distance(const PiecewiseConstantFn& a, const PiecewiseConstantFn& b);

/// Strength vectors E(u(x-), u(x+)) at every jump point.
struct JumpTable {
  std::vector<double> xs;
  std::vector<Vec> sigma;
};

struct StabilityConstants {
  double C0 = 4.0;
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double delta = 0.1;
};

JumpTable jump_strengths(const FluxModel& model, const PiecewiseConstantFn& u);

/// V: total wave strength.
double linear_functional(const JumpTable& table);

/// Q: interaction potential over approaching pairs.
double interaction_potential(const FluxModel& model, const JumpTable& table);

/// Upsilon = V + C0 Q.
double glimm_total(const FluxModel& model, const PiecewiseConstantFn& u,
                   const StabilityConstants& consts);

/// A_j^-(x) = sum_{y<=x} |sigma_{y,j}| and A_j^+(x) = sum_{y>x} |sigma_{y,j}|.
struct SideSums {
  Vec minus;
  Vec plus;
};
SideSums side_sums(const JumpTable& table, int n, double x);

/// Transversal sums A_i[u](q,x); the same-family term (GNL only) follows the
/// sign of q, with q = 0 on the A^+ branch.
double big_A(const FluxModel& model, const JumpTable& table, int family, double q, double x);

double stability_weight(const FluxModel& model, const JumpTable& tv, const JumpTable& tvt,
                        double q_v, double q_vt, int family, double q, double x,
                        const StabilityConstants& consts);

/// Phi(v, v~) as an exact finite sum over the common refinement.
double stability_phi(const FluxModel& model, const PiecewiseConstantFn& v,
                     const PiecewiseConstantFn& v_tilde, const StabilityConstants& consts);

/// Sampled step function sum_a u(y_a) chi_[x_a, x_{a+1}).
PiecewiseConstantFn sample_coarsen(const PiecewiseConstantFn& u,
                                   const std::vector<double>& partition,
                                   const std::vector<double>& samples);

}  // namespace hypstab

#endif
