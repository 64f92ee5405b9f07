#include "hypstab/pcw.hpp"

#include <algorithm>
#include <cmath>

#include "hypstab/riemann.hpp"

namespace hypstab {

Vec PiecewiseConstantFn::at(double x) const {
  if (values.empty() || x < xs.front() || x >= xs.back()) return background;
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  return values[size_t(it - xs.begin()) - 1];
}

Vec PiecewiseConstantFn::left_limit(double x) const {
  if (values.empty() || x <= xs.front() || x > xs.back()) return background;
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  return values[size_t(it - xs.begin()) - 1];
}

std::vector<double> PiecewiseConstantFn::jump_points() const {
  std::vector<double> out;
  for (double x : xs)
    if ((at(x) - left_limit(x)).norm() > 0.0) out.push_back(x);
  return out;
}

void PiecewiseConstantFn::canonicalize(double tol) {
  // Keep only the breakpoints where the value actually changes; interior
  // plateaus equal to the background stay, leading/trailing ones are trimmed.
  std::vector<double> nxs;
  std::vector<Vec> nvals;
  Vec cur = background;
  for (size_t a = 0; a < values.size(); ++a) {
    if ((values[a] - cur).lpNorm<Eigen::Infinity>() > tol) {
      nxs.push_back(xs[a]);
      nvals.push_back(values[a]);
      cur = values[a];
    }
  }
  double close = xs.empty() ? 0.0 : xs.back();
  if (!nvals.empty() && (nvals.back() - background).lpNorm<Eigen::Infinity>() <= tol) {
    close = nxs.back();
    nvals.pop_back();
    nxs.pop_back();
  }
  if (nvals.empty()) {
    xs.clear();
    values.clear();
    return;
  }
  nxs.push_back(close);
  xs = std::move(nxs);
  values = std::move(nvals);
}

double l1_distance(const PiecewiseConstantFn& a, const PiecewiseConstantFn& b) {
  std::vector<double> pts;
  pts.insert(pts.end(), a.xs.begin(), a.xs.end());
  pts.insert(pts.end(), b.xs.begin(), b.xs.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double mid = 0.5 * (pts[i] + pts[i + 1]);
    total += (pts[i + 1] - pts[i]) * (a.at(mid) - b.at(mid)).norm();
  }
  return total;
}

JumpTable jump_strengths(const FluxModel& model, const PiecewiseConstantFn& u) {
  JumpTable table;
  for (double x : u.jump_points()) {
    table.xs.push_back(x);
    table.sigma.push_back(solve_strengths(model, u.left_limit(x), u.at(x)));
  }
  return table;
}

double linear_functional(const JumpTable& table) {
  double v = 0.0;
  for (const Vec& s : table.sigma) v += s.cwiseAbs().sum();
  return v;
}

double interaction_potential(const FluxModel& model, const JumpTable& table) {
  double q = 0.0;
  const size_t m = table.xs.size();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      for (int i = 0; i < model.n; ++i)
        for (int j = 0; j < model.n; ++j) {
          const double si = table.sigma[a][i];  // at x (left)
          const double sj = table.sigma[b][j];  // at y (right)
          if (si == 0.0 || sj == 0.0) continue;
          const bool approaching =
              i > j || (i == j && model.field_kind[i] == FieldKind::GNL && std::min(si, sj) < 0.0);
          if (approaching) q += std::abs(si * sj);
        }
  return q;
}

double glimm_total(const FluxModel& model, const PiecewiseConstantFn& u,
                   const StabilityConstants& consts) {
  JumpTable table = jump_strengths(model, u);
  return linear_functional(table) + consts.C0 * interaction_potential(model, table);
}

SideSums side_sums(const JumpTable& table, int n, double x) {
  SideSums s;
  s.minus = Vec::Zero(n);
  s.plus = Vec::Zero(n);
  for (size_t a = 0; a < table.xs.size(); ++a) {
    Vec abs_sigma = table.sigma[a].cwiseAbs();
    if (table.xs[a] <= x)
      s.minus += abs_sigma;
    else
      s.plus += abs_sigma;
  }
  return s;
}

double big_A(const FluxModel& model, const JumpTable& table, int family, double q, double x) {
  SideSums s = side_sums(table, model.n, x);
  double a = 0.0;
  for (int j = 0; j < family; ++j) a += s.plus[j];
  for (int j = family + 1; j < model.n; ++j) a += s.minus[j];
  if (model.field_kind[family] == FieldKind::GNL) a += (q >= 0.0) ? s.plus[family] : s.minus[family];
  return a;
}

double stability_weight(const FluxModel& model, const JumpTable& tv, const JumpTable& tvt,
                        double q_v, double q_vt, int family, double q, double x,
                        const StabilityConstants& consts) {
  return 1.0 + consts.kappa1 * big_A(model, tv, family, q, x) +
         consts.kappa1 * big_A(model, tvt, family, -q, x) +
         consts.kappa1 * consts.kappa2 * (q_v + q_vt);
}

double stability_phi(const FluxModel& model, const PiecewiseConstantFn& v,
                     const PiecewiseConstantFn& v_tilde, const StabilityConstants& consts) {
  std::vector<double> pts;
  pts.insert(pts.end(), v.xs.begin(), v.xs.end());
  pts.insert(pts.end(), v_tilde.xs.begin(), v_tilde.xs.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) return 0.0;

  JumpTable tv = jump_strengths(model, v);
  JumpTable tvt = jump_strengths(model, v_tilde);
  const double q_v = interaction_potential(model, tv);
  const double q_vt = interaction_potential(model, tvt);

  double phi = 0.0;
  for (size_t a = 0; a + 1 < pts.size(); ++a) {
    const double x = 0.5 * (pts[a] + pts[a + 1]);
    const double len = pts[a + 1] - pts[a];
    Vec uv = v.at(x), ut = v_tilde.at(x);
    if ((uv - ut).norm() == 0.0) continue;
    Vec q = solve_shock_strengths(model, uv, ut);
    for (int i = 0; i < model.n; ++i) {
      if (q[i] == 0.0) continue;
      phi += len * std::abs(q[i]) *
             stability_weight(model, tv, tvt, q_v, q_vt, i, q[i], x, consts);
    }
  }
  return phi;
}

PiecewiseConstantFn sample_coarsen(const PiecewiseConstantFn& u,
                                   const std::vector<double>& partition,
                                   const std::vector<double>& samples) {
  if (partition.size() != samples.size() + 1)
    throw BadParameterError("sample_coarsen: need one sample per partition interval");
  for (size_t a = 0; a + 1 < partition.size(); ++a) {
    if (!(partition[a] < partition[a + 1]))
      throw BadParameterError("sample_coarsen: partition not increasing");
    if (samples[a] < partition[a] || samples[a] >= partition[a + 1])
      throw BadParameterError("sample_coarsen: sample outside its interval");
  }
  PiecewiseConstantFn out;
  out.background = u.background;
  out.xs = partition;
  for (double y : samples) out.values.push_back(u.at(y));
  out.canonicalize();
  return out;
}

}  // namespace hypstab
