#ifndef HYPSTAB_FRONT_TRACKING_HPP
#define HYPSTAB_FRONT_TRACKING_HPP

#include <vector>

#include "hypstab/pcw.hpp"
#include "hypstab/riemann.hpp"

namespace hypstab {

/// A moving discontinuity. Non-physical fronts carry family = -1, travel at
/// the fixed speed lambda-hat (above every characteristic speed), and their
/// strength is the Euclidean size of the jump.
struct Front {
  double x;
  double speed;
  int family;  // 0-based; -1 = non-physical
  double strength;
  WaveKind kind;
  Vec left, right;

  bool physical() const { return family >= 0; }
};

struct FTEvent {
  double t, x;
  bool simplified;
  int n_incoming, n_outgoing;
  double upsilon_before, upsilon_after;  // front-list Glimm functional
  double np_total;                       // total non-physical strength after
};

/// Delta record for one event: the two fronts starting at `index` are
/// replaced by `outgoing`.
struct FTReplacement {
  size_t index;
  std::vector<Front> outgoing;
};

struct FTTrajectory {
  double eps = 0.0;
  double t_end = 0.0;
  Vec background;
  std::vector<Front> initial;  // fronts at t = 0
  std::vector<FTEvent> events;
  std::vector<FTReplacement> replacements;  // parallel to events

  /// Fronts advanced to time t (post-event state at event times),
  /// reconstructed by replaying the event deltas.
  std::vector<Front> fronts_at(double t) const;
};

/// Event-driven eps-approximate front tracking on [0, T]: accurate Riemann
/// solutions when |sigma sigma'| >= eps, simplified solver plus a non-physical
/// remainder front otherwise.
FTTrajectory ft_solve(const FluxModel& model, const PiecewiseConstantFn& u0, double eps, double T,
                      const StabilityConstants& consts);

/// The step function w(t, .) in canonical form.
PiecewiseConstantFn snapshot(const FTTrajectory& traj, double t);

/// Glimm functionals evaluated directly on a front list; non-physical fronts
/// count as a fictitious fastest family in the interaction potential.
double front_V(const std::vector<Front>& fronts);
double front_Q(const FluxModel& model, const std::vector<Front>& fronts);
double front_upsilon(const FluxModel& model, const std::vector<Front>& fronts,
                     const StabilityConstants& consts);
double np_total_strength(const std::vector<Front>& fronts);

/// Phi^eps between two front representations at a common time: non-physical
/// fronts are excluded from the A-weights and treated as the fictitious
/// fastest family inside the interaction potentials.
double phi_eps(const FluxModel& model, const std::vector<Front>& fv, const Vec& bg_v,
               const std::vector<Front>& fvt, const Vec& bg_vt, const StabilityConstants& consts);

struct PhiTimelinePoint {
  double t, phi, l1, upsilon, upsilon_tilde;
};

std::vector<PhiTimelinePoint> phi_timeline(const FluxModel& model, const FTTrajectory& traj,
                                           const FTTrajectory& traj_tilde,
                                           const StabilityConstants& consts,
                                           const std::vector<double>& sample_times);

struct PhiEpsComparison {
  double phi, phi_eps, l1;
};

PhiEpsComparison phi_eps_compare(const FluxModel& model, const FTTrajectory& traj,
                                 const FTTrajectory& traj_tilde, const StabilityConstants& consts,
                                 double t);

}  // namespace hypstab

#endif
