#include "hypstab/measures.hpp"

#include <algorithm>
#include <cmath>

#include "hypstab/riemann.hpp"

namespace hypstab {

namespace {
constexpr double kDensityResolution = 1e-2;  // cells per piece: 1 / resolution
}

// ---------------------------------------------------------------------------
// BVFunction

BVFunction BVFunction::from_pcw(const PiecewiseConstantFn& u) {
  BVFunction f;
  f.background = u.background;
  for (size_t a = 0; a < u.values.size(); ++a) {
    BVPiece p;
    p.a = u.xs[a];
    p.b = u.xs[a + 1];
    p.value0 = u.values[a];
    p.slope = Vec::Zero(u.background.size());
    f.pieces.push_back(std::move(p));
  }
  return f;
}

Vec BVFunction::at(double x) const {
  for (const BVPiece& p : pieces)
    if (x >= p.a && x < p.b) return p.value0 + (x - p.a) * p.slope;
  return background;
}

Vec BVFunction::left_limit(double x) const {
  for (const BVPiece& p : pieces)
    if (x > p.a && x <= p.b) return p.value0 + (x - p.a) * p.slope;
  return background;
}

double BVFunction::total_variation() const {
  double tv = 0.0;
  for (const BVPiece& p : pieces) tv += p.slope.norm() * (p.b - p.a);
  for (double x : breakpoints()) tv += (at(x) - left_limit(x)).norm();
  return tv;
}

bool BVFunction::piecewise_constant() const {
  for (const BVPiece& p : pieces)
    if (p.slope.norm() > 0.0) return false;
  return true;
}

std::vector<double> BVFunction::breakpoints() const {
  std::vector<double> pts;
  for (const BVPiece& p : pieces) {
    pts.push_back(p.a);
    pts.push_back(p.b);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

double l1_distance(const BVFunction& a, const BVFunction& b) {
  std::vector<double> pts = a.breakpoints();
  for (double x : b.breakpoints()) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double total = 0.0;
  // Both functions are affine between merged breakpoints; 5-point Gauss is
  // exact enough for the |difference| integrand up to interior sign changes,
  // which a fixed subdivision resolves to quadrature accuracy.
  static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                               0.4786286704993665, 0.2369268850561891};
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i], hi = pts[i + 1];
    const int sub = 8;
    for (int s = 0; s < sub; ++s) {
      const double a0 = lo + (hi - lo) * s / sub, b0 = lo + (hi - lo) * (s + 1) / sub;
      const double c = 0.5 * (a0 + b0), h = 0.5 * (b0 - a0);
      for (int g = 0; g < 5; ++g) total += h * gw[g] * (a.at(c + h * gx[g]) - b.at(c + h * gx[g])).norm();
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// SignedMeasure1D

void SignedMeasure1D::sort_atoms() {
  std::sort(atoms.begin(), atoms.end());
}

double SignedMeasure1D::total() const {
  double t = 0.0;
  for (const auto& [x, m] : atoms) t += m;
  for (size_t c = 0; c + 1 < grid.size(); ++c) t += density[c] * (grid[c + 1] - grid[c]);
  return t;
}

double SignedMeasure1D::total_variation() const {
  double t = 0.0;
  for (const auto& [x, m] : atoms) t += std::abs(m);
  for (size_t c = 0; c + 1 < grid.size(); ++c) t += std::abs(density[c]) * (grid[c + 1] - grid[c]);
  return t;
}

SignedMeasure1D SignedMeasure1D::abs() const {
  SignedMeasure1D out = *this;
  for (auto& [x, m] : out.atoms) m = std::abs(m);
  for (double& d : out.density) d = std::abs(d);
  return out;
}

SignedMeasure1D SignedMeasure1D::positive_part() const {
  SignedMeasure1D out = *this;
  for (auto& [x, m] : out.atoms) m = std::max(m, 0.0);
  for (double& d : out.density) d = std::max(d, 0.0);
  return out;
}

SignedMeasure1D SignedMeasure1D::negative_part() const {
  SignedMeasure1D out = *this;
  for (auto& [x, m] : out.atoms) m = std::max(-m, 0.0);
  for (double& d : out.density) d = std::max(-d, 0.0);
  return out;
}

double SignedMeasure1D::interval(double a, double b, bool include_a, bool include_b) const {
  if (b < a || (a == b && !(include_a && include_b))) return 0.0;
  double t = 0.0;
  for (const auto& [x, m] : atoms) {
    if (x < a || (x == a && !include_a)) continue;
    if (x > b || (x == b && !include_b)) continue;
    t += m;
  }
  for (size_t c = 0; c + 1 < grid.size(); ++c) {
    const double lo = std::max(grid[c], a);
    const double hi = std::min(grid[c + 1], b);
    if (hi > lo) t += density[c] * (hi - lo);
  }
  return t;
}

double SignedMeasure1D::cumulative_closed(double x) const {
  double t = 0.0;
  for (const auto& [loc, m] : atoms)
    if (loc <= x) t += m;
  for (size_t c = 0; c + 1 < grid.size(); ++c) {
    const double hi = std::min(grid[c + 1], x);
    if (hi > grid[c]) t += density[c] * (hi - grid[c]);
  }
  return t;
}

double SignedMeasure1D::cumulative_open(double x) const {
  double t = cumulative_closed(x);
  for (const auto& [loc, m] : atoms)
    if (loc == x) t -= m;
  return t;
}

double pair_integral_half_plane(const SignedMeasure1D& alpha, const SignedMeasure1D& beta) {
  // (alpha x beta)(K) = integral of G(y) = alpha(]-inf, y[) against beta.
  double total = 0.0;
  for (const auto& [y, m] : beta.atoms) total += m * alpha.cumulative_open(y);

  if (beta.grid.size() >= 2) {
    // Nodes where G changes character.
    std::vector<double> nodes;
    for (const auto& [x, m] : alpha.atoms) nodes.push_back(x);
    for (double g : alpha.grid) nodes.push_back(g);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    for (size_t c = 0; c + 1 < beta.grid.size(); ++c) {
      const double h = beta.density[c];
      if (h == 0.0) continue;
      const double c0 = beta.grid[c], c1 = beta.grid[c + 1];
      std::vector<double> pts{c0};
      for (double nd : nodes)
        if (nd > c0 && nd < c1) pts.push_back(nd);
      pts.push_back(c1);
      for (size_t s = 0; s + 1 < pts.size(); ++s) {
        // G is linear on the open segment; trapezoid with one-sided limits.
        const double g_lo = alpha.cumulative_closed(pts[s]);
        const double g_hi = alpha.cumulative_open(pts[s + 1]);
        total += h * (pts[s + 1] - pts[s]) * 0.5 * (g_lo + g_hi);
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Wave measures

WaveMeasureSet wave_measures(const FluxModel& model, const BVFunction& u) {
  const int n = model.n;
  WaveMeasureSet wm;
  wm.mu.resize(n);
  wm.tv_measure = SignedMeasure1D{};

  // Shared density grid across families.
  std::vector<double> grid;
  std::vector<std::vector<double>> dens(n);
  std::vector<double> tv_dens;
  for (const BVPiece& p : u.pieces) {
    if (p.slope.norm() == 0.0) continue;
    const int cells = std::max(1, int(std::ceil(1.0 / kDensityResolution)));
    for (int c = 0; c < cells; ++c) {
      const double lo = p.a + (p.b - p.a) * c / cells;
      const double hi = p.a + (p.b - p.a) * (c + 1) / cells;
      if (grid.empty() || grid.back() != lo) {
        if (!grid.empty()) {
          // Gap between pieces: insert a zero-density cell.
          for (int i = 0; i < n; ++i) dens[i].push_back(0.0);
          tv_dens.push_back(0.0);
        }
        grid.push_back(lo);
      }
      // Cell-average of l_i(u) . u' by the 2-point Gauss rule.
      const double m1 = 0.5 * (lo + hi) - (hi - lo) * 0.5 / std::sqrt(3.0);
      const double m2 = 0.5 * (lo + hi) + (hi - lo) * 0.5 / std::sqrt(3.0);
      EigenData e1 = eigen_at(model, u.at(m1));
      EigenData e2 = eigen_at(model, u.at(m2));
      for (int i = 0; i < n; ++i)
        dens[i].push_back(0.5 * (e1.left.row(i).dot(p.slope) + e2.left.row(i).dot(p.slope)));
      tv_dens.push_back(p.slope.norm());
      grid.push_back(hi);
    }
  }
  for (int i = 0; i < n; ++i) {
    wm.mu[i].grid = grid;
    wm.mu[i].density = dens[i];
  }
  wm.tv_measure.grid = grid;
  wm.tv_measure.density = tv_dens;

  for (double x : u.breakpoints()) {
    Vec lo = u.left_limit(x), hi = u.at(x);
    if ((hi - lo).norm() == 0.0) continue;
    Vec e = solve_strengths(model, lo, hi);
    for (int i = 0; i < n; ++i)
      if (e[i] != 0.0) wm.mu[i].atoms.emplace_back(x, e[i]);
    wm.tv_measure.atoms.emplace_back(x, (hi - lo).norm());
  }
  for (int i = 0; i < n; ++i) {
    wm.mu[i].sort_atoms();
    wm.mu_pos.push_back(wm.mu[i].positive_part());
    wm.mu_neg.push_back(wm.mu[i].negative_part());
  }
  wm.tv_measure.sort_atoms();
  return wm;
}

double interaction_measure(const FluxModel& model, const WaveMeasureSet& wm) {
  double q = 0.0;
  for (int i = 0; i < model.n; ++i) {
    for (int j = 0; j < i; ++j)
      q += pair_integral_half_plane(wm.mu[i].abs(), wm.mu[j].abs());
    // Same-family terms only for genuinely nonlinear fields, matching the
    // approaching-wave condition of the interaction potential.
    if (model.field_kind[i] == FieldKind::GNL) {
      q += pair_integral_half_plane(wm.mu_neg[i], wm.mu_neg[i]);
      q += pair_integral_half_plane(wm.mu_pos[i], wm.mu_neg[i]);
      q += pair_integral_half_plane(wm.mu_neg[i], wm.mu_pos[i]);
    }
  }
  return q;
}

double upsilon_hat(const FluxModel& model, const BVFunction& u, const StabilityConstants& consts) {
  WaveMeasureSet wm = wave_measures(model, u);
  double v = 0.0;
  for (int i = 0; i < model.n; ++i) v += wm.mu[i].total_variation();
  return v + consts.C0 * interaction_measure(model, wm);
}

double a_hat(const FluxModel& model, const WaveMeasureSet& wm_u, const WaveMeasureSet& wm_ut,
             int family, double x, double q_sign) {
  double a = 0.0;
  for (int j = family + 1; j < model.n; ++j) {
    a += wm_u.mu[j].abs().cumulative_closed(x);
    a += wm_ut.mu[j].abs().cumulative_closed(x);
  }
  for (int j = 0; j < family; ++j) {
    a += wm_u.mu[j].abs().total() - wm_u.mu[j].abs().cumulative_closed(x);
    a += wm_ut.mu[j].abs().total() - wm_ut.mu[j].abs().cumulative_closed(x);
  }
  if (model.field_kind[family] == FieldKind::GNL) {
    const SignedMeasure1D au = wm_u.mu[family].abs();
    const SignedMeasure1D at = wm_ut.mu[family].abs();
    if (q_sign < 0.0)
      a += au.cumulative_closed(x) + (at.total() - at.cumulative_closed(x));
    else
      a += (au.total() - au.cumulative_closed(x)) + at.cumulative_closed(x);
  }
  return a;
}

namespace {

struct XiContext {
  const FluxModel* model;
  const BVFunction* u;
  const BVFunction* ut;
  const WaveMeasureSet* wm_u;
  const WaveMeasureSet* wm_ut;
  double q_hat_sum;  // kappa1 kappa2 (Q(u) + Q(u~))
  const StabilityConstants* consts;

  Vec strengths(double x) const {
    Vec a = u->at(x), b = ut->at(x);
    if ((a - b).norm() == 0.0) return Vec::Zero(model->n);
    return solve_shock_strengths(*model, a, b);
  }

  double integrand(double x) const {
    Vec q = strengths(x);
    double g = 0.0;
    for (int i = 0; i < model->n; ++i) {
      if (q[i] == 0.0) continue;
      const double w = 1.0 + consts->kappa1 * a_hat(*model, *wm_u, *wm_ut, i, x, q[i]) + q_hat_sum;
      g += std::abs(q[i]) * w;
    }
    return g;
  }
};

double gauss5(const XiContext& ctx, double a, double b) {
  static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                               0.4786286704993665, 0.2369268850561891};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int g = 0; g < 5; ++g) s += gw[g] * ctx.integrand(c + h * gx[g]);
  return h * s;
}

double adaptive(const XiContext& ctx, double a, double b, double whole, int depth, double scale) {
  const double m = 0.5 * (a + b);
  const double left = gauss5(ctx, a, m), right = gauss5(ctx, m, b);
  if (std::abs(left + right - whole) <= 1e-8 * std::max(scale, std::abs(left + right)) ||
      b - a < 1e-12)
    return left + right;
  if (depth > 40) throw NumericalFailureError("xi_hat: adaptive quadrature did not converge");
  return adaptive(ctx, a, m, left, depth + 1, scale) + adaptive(ctx, m, b, right, depth + 1, scale);
}

// Splits [a,b] at sign changes of each q_i located by bisection, then
// integrates each subsegment adaptively.
double integrate_segment(const XiContext& ctx, double a, double b) {
  std::vector<double> cuts{a, b};
  Vec qa = ctx.strengths(a + 1e-13 * (b - a)), qb = ctx.strengths(b - 1e-13 * (b - a));
  for (int i = 0; i < ctx.model->n; ++i) {
    if (qa[i] * qb[i] < 0.0) {
      double lo = a, hi = b;
      for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (ctx.strengths(mid)[i] * qa[i] > 0.0)
          lo = mid;
        else
          hi = mid;
      }
      cuts.push_back(0.5 * (lo + hi));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (size_t s = 0; s + 1 < cuts.size(); ++s) {
    if (cuts[s + 1] - cuts[s] < 1e-14) continue;
    const double coarse = gauss5(ctx, cuts[s], cuts[s + 1]);
    total += adaptive(ctx, cuts[s], cuts[s + 1], coarse, 0, std::max(std::abs(coarse), 1e-30));
  }
  return total;
}

}  // namespace

double xi_hat(const FluxModel& model, const BVFunction& u, const BVFunction& u_tilde,
              const StabilityConstants& consts) {
  WaveMeasureSet wm_u = wave_measures(model, u);
  WaveMeasureSet wm_ut = wave_measures(model, u_tilde);
  XiContext ctx{&model, &u, &u_tilde, &wm_u, &wm_ut, 0.0, &consts};
  ctx.q_hat_sum = consts.kappa1 * consts.kappa2 *
                  (interaction_measure(model, wm_u) + interaction_measure(model, wm_ut));

  std::vector<double> pts = u.breakpoints();
  for (double x : u_tilde.breakpoints()) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return 0.0;

  const bool both_constant = u.piecewise_constant() && u_tilde.piecewise_constant();
  double total = 0.0;
  for (size_t s = 0; s + 1 < pts.size(); ++s) {
    if (both_constant) {
      const double mid = 0.5 * (pts[s] + pts[s + 1]);
      total += (pts[s + 1] - pts[s]) * ctx.integrand(mid);
    } else {
      total += integrate_segment(ctx, pts[s], pts[s + 1]);
    }
  }
  return total;
}

PiecewiseConstantFn approx_sequence(const FluxModel& model, const BVFunction& u, int nu) {
  if (nu < 1) throw BadParameterError("approx_sequence: nu must be positive");
  PiecewiseConstantFn out;
  out.background = u.background;
  if (u.pieces.empty()) return out;

  WaveMeasureSet wm = wave_measures(model, u);
  const SignedMeasure1D& tv = wm.tv_measure;

  double a = u.pieces.front().a - 0.1;
  double b = std::max(u.pieces.back().b + 0.1, a + 1.0 + 1e-9);
  const double bound = 1.0 / ((b - a) * double(nu));

  // Mesh: every jump/piece endpoint, continuous mass <= bound in between.
  std::vector<double> mesh{a};
  std::vector<double> anchors = u.breakpoints();
  anchors.push_back(b);
  for (double nxt : anchors) {
    if (nxt <= mesh.back()) continue;
    const double prev = mesh.back();
    // Continuous mass only (atoms sit at anchors, never strictly inside).
    double cont = 0.0;
    for (size_t c = 0; c + 1 < tv.grid.size(); ++c) {
      const double lo = std::max(tv.grid[c], prev), hi = std::min(tv.grid[c + 1], nxt);
      if (hi > lo) cont += std::abs(tv.density[c]) * (hi - lo);
    }
    // Refine by mass and by length; a finer mesh keeps the mass bound valid
    // and makes the interval diameters genuinely O(1/nu).
    const int sub = std::max({1, int(std::ceil(cont / bound)),
                              int(std::ceil((nxt - prev) * double(nu) / (b - a)))});
    for (int s = 1; s <= sub; ++s) mesh.push_back(prev + (nxt - prev) * s / sub);
  }

  const size_t n_mesh = mesh.size();
  std::vector<double> y(n_mesh + 1);
  y[0] = mesh.front() - 1.0;
  for (size_t al = 1; al < n_mesh; ++al) y[al] = 0.5 * (mesh[al - 1] + mesh[al]);
  y[n_mesh] = mesh.back() + 1.0;

  for (size_t al = 0; al < n_mesh; ++al) {
    out.xs.push_back(y[al]);
    out.values.push_back(u.left_limit(mesh[al]));
    out.xs.push_back(mesh[al]);
    out.values.push_back(u.at(mesh[al]));
  }
  out.xs.push_back(y[n_mesh]);
  out.canonicalize();
  return out;
}

GapBound gap_bound(const FluxModel& model, const BVFunction& u, double a, double b) {
  if (!(a < b)) throw BadParameterError("gap_bound: need a < b");
  WaveMeasureSet wm = wave_measures(model, u);
  Vec e = solve_strengths(model, u.at(a), u.left_limit(b));
  GapBound out{0.0, 0.0};
  for (int i = 0; i < model.n; ++i)
    out.lhs = std::max(out.lhs, std::abs(e[i] - wm.mu[i].interval(a, b, false, false)));

  // diam of the image of ]a,b[; affine pieces attain extrema at (clipped)
  // endpoints.
  std::vector<Vec> samples;
  for (const BVPiece& p : u.pieces) {
    const double lo = std::max(p.a, a), hi = std::min(p.b, b);
    if (hi <= lo) continue;
    samples.push_back(p.value0 + (lo - p.a) * p.slope);
    samples.push_back(p.value0 + (hi - p.a) * p.slope);
  }
  samples.push_back(u.at(a));
  samples.push_back(u.left_limit(b));
  double diam = 0.0;
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      diam = std::max(diam, (samples[i] - samples[j]).norm());
  out.rhs = diam * wm.tv_measure.interval(a, b, false, false);
  return out;
}

}  // namespace hypstab
