#include "hypstab/front_tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypstab {

namespace {

constexpr double kPrune = 1e-14;        // zero-strength fronts are dropped
constexpr double kCoalesce = 1e-13;     // event coalescing window
constexpr double kMinClosing = 1e-12;   // minimum approach speed for a collision
constexpr long kMaxEvents = 1000000;

Front make_physical_front(const FluxModel& model, int family, double sigma, const Vec& u_l,
                          double x) {
  Front f;
  f.x = x;
  f.family = family;
  f.strength = sigma;
  f.left = u_l;
  if (model.field_kind[family] == FieldKind::LD) {
    f.kind = WaveKind::Contact;
    f.right = rarefaction_point(model, family, sigma, u_l);
    f.speed = eigen_at(model, u_l).lambdas[family];
  } else if (sigma < 0.0) {
    auto [u, s] = shock_point(model, family, sigma, u_l);
    f.kind = WaveKind::Shock;
    f.right = u;
    f.speed = s;
  } else {
    f.kind = WaveKind::RarefactionPiece;
    f.right = rarefaction_point(model, family, sigma, u_l);
    f.speed = eigen_at(model, f.right).lambdas[family];
  }
  return f;
}

Front make_np_front(const Vec& u_l, const Vec& u_r, double x, double lambda_hat) {
  Front f;
  f.x = x;
  f.family = -1;
  f.strength = (u_r - u_l).norm();
  f.kind = WaveKind::NonPhysical;
  f.left = u_l;
  f.right = u_r;
  f.speed = lambda_hat;
  return f;
}

std::vector<Front> fan_fronts(const Fan& fan, double x) {
  std::vector<Front> out;
  for (const Wave& w : fan.waves) {
    Front f;
    f.x = x;
    f.family = w.family;
    f.strength = w.strength;
    f.kind = w.kind;
    f.left = w.left;
    f.right = w.right;
    f.speed = w.speed;
    out.push_back(std::move(f));
  }
  return out;
}

// Resolves the binary collision (a hits b, a on the left) into outgoing
// fronts at position x.
std::vector<Front> resolve_collision(const FluxModel& model, const Front& a, const Front& b,
                                     double eps, double x, double lambda_hat, bool& simplified) {
  const Vec& u_l = a.left;
  const Vec& u_r = b.right;
  std::vector<Front> out;

  if (!a.physical()) {
    // A non-physical front overtakes a physical one: the physical wave is
    // transmitted unchanged, the remainder stays non-physical.
    simplified = true;
    Front phys = make_physical_front(model, b.family, b.strength, u_l, x);
    if (std::abs(phys.strength) >= kPrune) out.push_back(std::move(phys));
    Front np = make_np_front(out.empty() ? u_l : out.back().right, u_r, x, lambda_hat);
    if (np.strength >= kPrune) out.push_back(std::move(np));
    return out;
  }

  if (std::abs(a.strength * b.strength) >= eps) {
    simplified = false;
    return fan_fronts(riemann_fan(model, u_l, u_r, eps), x);
  }

  simplified = true;
  Vec u = u_l;
  if (a.family == b.family) {
    const double sigma = a.strength + b.strength;
    if (std::abs(sigma) >= kPrune) {
      Front f = make_physical_front(model, a.family, sigma, u, x);
      u = f.right;
      out.push_back(std::move(f));
    }
  } else {
    // Outgoing waves of the incoming families only, in ascending family
    // order; the left (faster-family) strength passes through the slower one.
    const Front* lo = (a.family < b.family) ? &a : &b;
    const Front* hi = (a.family < b.family) ? &b : &a;
    for (const Front* w : {lo, hi}) {
      if (std::abs(w->strength) < kPrune) continue;
      Front f = make_physical_front(model, w->family, w->strength, u, x);
      u = f.right;
      out.push_back(std::move(f));
    }
  }
  Front np = make_np_front(u, u_r, x, lambda_hat);
  if (np.strength >= kPrune) out.push_back(std::move(np));
  return out;
}

}  // namespace

std::vector<Front> FTTrajectory::fronts_at(double t) const {
  std::vector<Front> out = initial;
  double cur = 0.0;
  for (size_t e = 0; e < events.size() && events[e].t <= t + 1e-15; ++e) {
    const double dt = events[e].t - cur;
    for (Front& f : out) f.x += f.speed * dt;
    cur = events[e].t;
    const FTReplacement& rep = replacements[e];
    out.erase(out.begin() + rep.index, out.begin() + rep.index + 2);
    out.insert(out.begin() + rep.index, rep.outgoing.begin(), rep.outgoing.end());
  }
  for (Front& f : out) f.x += f.speed * (t - cur);
  std::stable_sort(out.begin(), out.end(), [](const Front& a, const Front& b) { return a.x < b.x; });
  return out;
}

double front_V(const std::vector<Front>& fronts) {
  double v = 0.0;
  for (const Front& f : fronts) v += std::abs(f.strength);
  return v;
}

namespace {

// Interaction term of an ordered pair (fa to the left of fb); non-physical
// fronts act as a fictitious fastest family.
double q_pair(const FluxModel& model, const Front& fa, const Front& fb) {
  const int ia = fa.physical() ? fa.family : model.n;
  const int ib = fb.physical() ? fb.family : model.n;
  const bool approaching =
      ia > ib || (ia == ib && ia < model.n && model.field_kind[ia] == FieldKind::GNL &&
                  std::min(fa.strength, fb.strength) < 0.0);
  return approaching ? std::abs(fa.strength * fb.strength) : 0.0;
}

// Q-interactions of the block [lo, hi) with everything outside it, plus the
// pairs inside the block.
double q_block(const FluxModel& model, const std::vector<Front>& fronts, size_t lo, size_t hi) {
  double q = 0.0;
  for (size_t p = lo; p < hi; ++p) {
    for (size_t k = 0; k < lo; ++k) q += q_pair(model, fronts[k], fronts[p]);
    for (size_t k = hi; k < fronts.size(); ++k) q += q_pair(model, fronts[p], fronts[k]);
    for (size_t k = p + 1; k < hi; ++k) q += q_pair(model, fronts[p], fronts[k]);
  }
  return q;
}

}  // namespace

double front_Q(const FluxModel& model, const std::vector<Front>& fronts) {
  double q = 0.0;
  for (size_t a = 0; a < fronts.size(); ++a)
    for (size_t b = a + 1; b < fronts.size(); ++b) q += q_pair(model, fronts[a], fronts[b]);
  return q;
}

double front_upsilon(const FluxModel& model, const std::vector<Front>& fronts,
                     const StabilityConstants& consts) {
  return front_V(fronts) + consts.C0 * front_Q(model, fronts);
}

double np_total_strength(const std::vector<Front>& fronts) {
  double t = 0.0;
  for (const Front& f : fronts)
    if (!f.physical()) t += f.strength;
  return t;
}

FTTrajectory ft_solve(const FluxModel& model, const PiecewiseConstantFn& u0, double eps, double T,
                      const StabilityConstants& consts) {
  if (!(eps > 0.0)) throw BadParameterError("ft_solve: eps must be positive");
  if (T < 0.0) throw BadParameterError("ft_solve: T must be nonnegative");

  const double lambda_hat = model.fast_speed();

  FTTrajectory traj;
  traj.eps = eps;
  traj.t_end = T;
  traj.background = u0.background;

  std::vector<Front> fronts;
  PiecewiseConstantFn u = u0;
  u.canonicalize();
  Vec cur = u.background;
  for (double x : u.jump_points()) {
    Vec right = u.at(x);
    for (Front& f : fan_fronts(riemann_fan(model, cur, right, eps), x))
      fronts.push_back(std::move(f));
    cur = right;
  }
  traj.initial = fronts;

  // Running functionals, updated incrementally at each event.
  double run_v = front_V(fronts);
  double run_q = front_Q(model, fronts);
  double run_np = np_total_strength(fronts);

  double t = 0.0;
  while (true) {
    // Next collision among adjacent fronts.
    double best_dt = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < fronts.size(); ++i) {
      const double closing = fronts[i].speed - fronts[i + 1].speed;
      if (closing <= kMinClosing) continue;
      const double dt = std::max(0.0, (fronts[i + 1].x - fronts[i].x) / closing);
      if (dt < best_dt) best_dt = dt;
    }
    if (!std::isfinite(best_dt) || t + best_dt > T) break;
    // Leftmost pair within the coalescing window of the earliest time.
    size_t hit = fronts.size();
    for (size_t i = 0; i + 1 < fronts.size(); ++i) {
      const double closing = fronts[i].speed - fronts[i + 1].speed;
      if (closing <= kMinClosing) continue;
      const double dt = std::max(0.0, (fronts[i + 1].x - fronts[i].x) / closing);
      if (dt <= best_dt + kCoalesce) {
        hit = i;
        break;
      }
    }

    t += best_dt;
    for (Front& f : fronts) f.x += f.speed * best_dt;
    const double xc = 0.5 * (fronts[hit].x + fronts[hit + 1].x);

    const double ups_before = run_v + consts.C0 * run_q;
    bool simplified = false;
    std::vector<Front> outgoing =
        resolve_collision(model, fronts[hit], fronts[hit + 1], eps, xc, lambda_hat, simplified);

    const double q_rm = q_block(model, fronts, hit, hit + 2);
    double v_delta = -std::abs(fronts[hit].strength) - std::abs(fronts[hit + 1].strength);
    double np_delta = 0.0;
    for (size_t p : {hit, hit + 1})
      if (!fronts[p].physical()) np_delta -= fronts[p].strength;

    fronts.erase(fronts.begin() + hit, fronts.begin() + hit + 2);
    fronts.insert(fronts.begin() + hit, outgoing.begin(), outgoing.end());
    traj.replacements.push_back({hit, outgoing});

    const double q_add = q_block(model, fronts, hit, hit + outgoing.size());
    for (const Front& f : outgoing) {
      v_delta += std::abs(f.strength);
      if (!f.physical()) np_delta += f.strength;
    }
    run_v += v_delta;
    run_q += q_add - q_rm;
    run_np += np_delta;

    FTEvent ev;
    ev.t = t;
    ev.x = xc;
    ev.simplified = simplified;
    ev.n_incoming = 2;
    ev.n_outgoing = int(outgoing.size());
    ev.upsilon_before = ups_before;
    ev.upsilon_after = run_v + consts.C0 * run_q;
    ev.np_total = run_np;
    traj.events.push_back(ev);

    if (long(traj.events.size()) > kMaxEvents)
      throw CollisionCascadeError("ft_solve: event cap exceeded");
  }
  return traj;
}

PiecewiseConstantFn snapshot(const FTTrajectory& traj, double t) {
  std::vector<Front> fronts = traj.fronts_at(t);
  PiecewiseConstantFn out;
  out.background = traj.background;
  if (fronts.empty()) return out;

  std::vector<double> xs;
  std::vector<Vec> rights;
  for (const Front& f : fronts) {
    if (!xs.empty() && f.x <= xs.back()) {
      rights.back() = f.right;  // coincident fronts: zero-width piece dropped
    } else {
      xs.push_back(f.x);
      rights.push_back(f.right);
    }
  }
  out.xs = xs;
  out.values.assign(rights.begin(), rights.end() - 1);
  out.canonicalize();
  return out;
}

namespace {

PiecewiseConstantFn fronts_to_pcw(const std::vector<Front>& fronts, const Vec& bg) {
  PiecewiseConstantFn out;
  out.background = bg;
  std::vector<Front> sorted = fronts;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Front& a, const Front& b) { return a.x < b.x; });
  for (const Front& f : sorted) {
    if (!out.xs.empty() && f.x <= out.xs.back()) {
      out.values.back() = f.right;
    } else {
      out.xs.push_back(f.x);
      out.values.push_back(f.right);
    }
  }
  if (!out.values.empty()) out.values.pop_back();
  out.canonicalize();
  return out;
}

JumpTable physical_jump_table(const FluxModel& model, const std::vector<Front>& fronts) {
  JumpTable table;
  for (const Front& f : fronts) {
    if (!f.physical()) continue;
    Vec s = Vec::Zero(model.n);
    s[f.family] = f.strength;
    table.xs.push_back(f.x);
    table.sigma.push_back(std::move(s));
  }
  return table;
}

}  // namespace

double phi_eps(const FluxModel& model, const std::vector<Front>& fv, const Vec& bg_v,
               const std::vector<Front>& fvt, const Vec& bg_vt,
               const StabilityConstants& consts) {
  PiecewiseConstantFn v = fronts_to_pcw(fv, bg_v);
  PiecewiseConstantFn vt = fronts_to_pcw(fvt, bg_vt);

  std::vector<double> pts;
  pts.insert(pts.end(), v.xs.begin(), v.xs.end());
  pts.insert(pts.end(), vt.xs.begin(), vt.xs.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return 0.0;

  JumpTable tv = physical_jump_table(model, fv);
  JumpTable tvt = physical_jump_table(model, fvt);
  const double q_v = front_Q(model, fv);
  const double q_vt = front_Q(model, fvt);

  double phi = 0.0;
  for (size_t a = 0; a + 1 < pts.size(); ++a) {
    const double x = 0.5 * (pts[a] + pts[a + 1]);
    const double len = pts[a + 1] - pts[a];
    Vec uv = v.at(x), ut = vt.at(x);
    if ((uv - ut).norm() == 0.0) continue;
    Vec q = solve_shock_strengths(model, uv, ut);
    for (int i = 0; i < model.n; ++i) {
      if (q[i] == 0.0) continue;
      const double w = 1.0 + consts.kappa1 * big_A(model, tv, i, q[i], x) +
                       consts.kappa1 * big_A(model, tvt, i, -q[i], x) +
                       consts.kappa1 * consts.kappa2 * (q_v + q_vt);
      phi += len * std::abs(q[i]) * w;
    }
  }
  return phi;
}

std::vector<PhiTimelinePoint> phi_timeline(const FluxModel& model, const FTTrajectory& traj,
                                           const FTTrajectory& traj_tilde,
                                           const StabilityConstants& consts,
                                           const std::vector<double>& sample_times) {
  std::vector<PhiTimelinePoint> out;
  for (double t : sample_times) {
    PiecewiseConstantFn a = snapshot(traj, t);
    PiecewiseConstantFn b = snapshot(traj_tilde, t);
    PhiTimelinePoint p;
    p.t = t;
    p.phi = stability_phi(model, a, b, consts);
    p.l1 = l1_distance(a, b);
    p.upsilon = front_upsilon(model, traj.fronts_at(t), consts);
    p.upsilon_tilde = front_upsilon(model, traj_tilde.fronts_at(t), consts);
    out.push_back(p);
  }
  return out;
}

PhiEpsComparison phi_eps_compare(const FluxModel& model, const FTTrajectory& traj,
                                 const FTTrajectory& traj_tilde, const StabilityConstants& consts,
                                 double t) {
  PiecewiseConstantFn a = snapshot(traj, t);
  PiecewiseConstantFn b = snapshot(traj_tilde, t);
  PhiEpsComparison cmp;
  cmp.phi = stability_phi(model, a, b, consts);
  cmp.phi_eps = phi_eps(model, traj.fronts_at(t), traj.background, traj_tilde.fronts_at(t),
                        traj_tilde.background, consts);
  cmp.l1 = l1_distance(a, b);
  return cmp;
}

}  // namespace hypstab
