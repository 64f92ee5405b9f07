#include "hypstab/generators.hpp"

#include <algorithm>

#include "hypstab/riemann.hpp"

namespace hypstab {

Vec random_state(const FluxModel& model, Rng& rng, double radius_fraction) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double r = model.domain_radius * radius_fraction;
  while (true) {
    Vec u(model.n);
    for (int i = 0; i < model.n; ++i) u[i] = r * unit(rng);
    if (u.norm() <= r) return Vec(model.origin + u);
  }
}

Vec random_strengths(const FluxModel& model, Rng& rng, double amplitude) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vec s(model.n);
  for (int i = 0; i < model.n; ++i) s[i] = amplitude * unit(rng);
  return s;
}

PiecewiseConstantFn random_step_function(const FluxModel& model, Rng& rng, int jumps,
                                         double amplitude) {
  if (jumps < 1) throw BadParameterError("random_step_function: need at least one jump");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> xs;
  for (int a = 0; a <= jumps; ++a) xs.push_back(unit(rng));
  std::sort(xs.begin(), xs.end());
  for (size_t a = 0; a + 1 < xs.size(); ++a)
    if (xs[a + 1] - xs[a] < 1e-6) xs[a + 1] = xs[a] + 1e-6;

  PiecewiseConstantFn u;
  u.background = model.origin;
  u.xs = xs;
  Vec cur = model.origin;
  for (int a = 0; a < jumps; ++a) {
    Vec sigma = random_strengths(model, rng, amplitude);
    Vec nxt;
    try {
      nxt = psi_compose(model, sigma, cur);
    } catch (const OutOfDomainError&) {
      nxt = psi_compose(model, Vec(-sigma), cur);
    }
    if (!model.in_domain(nxt)) nxt = psi_compose(model, Vec(-sigma), cur);
    u.values.push_back(nxt);
    cur = nxt;
  }
  u.canonicalize();
  return u;
}

BVFunction random_bv_function(const FluxModel& model, Rng& rng, int pieces, double amplitude) {
  if (pieces < 1) throw BadParameterError("random_bv_function: need at least one piece");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  std::vector<double> xs;
  for (int a = 0; a <= pieces; ++a) xs.push_back(unit(rng));
  std::sort(xs.begin(), xs.end());
  for (size_t a = 0; a + 1 < xs.size(); ++a)
    if (xs[a + 1] - xs[a] < 1e-3) xs[a + 1] = xs[a] + 1e-3;

  BVFunction u;
  u.background = model.origin;
  Vec cur = model.origin;
  for (int a = 0; a < pieces; ++a) {
    BVPiece p;
    p.a = xs[a];
    p.b = xs[a + 1];
    // Jump into the piece, then drift with a slope that stays in the domain.
    Vec jump(model.n), slope(model.n);
    for (int i = 0; i < model.n; ++i) {
      jump[i] = amplitude * sym(rng);
      slope[i] = amplitude * sym(rng);
    }
    Vec start = cur + jump;
    if (!model.in_domain(start)) start = cur - jump;
    Vec end = start + (p.b - p.a) * slope;
    if (!model.in_domain(end)) slope = -slope;
    p.value0 = start;
    p.slope = slope;
    cur = start + (p.b - p.a) * slope;
    u.pieces.push_back(std::move(p));
  }
  return u;
}

}  // namespace hypstab
