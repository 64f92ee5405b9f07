#include "hypstab/riemann.hpp"

#include <cmath>

namespace hypstab {

namespace {

constexpr double kOdeStep = 1e-3;          // rarefaction RK4 substep in sigma
constexpr double kShockContinuation = 1e-2;  // continuation step for the RH branch
constexpr double kSmallSigma = 1e-5;       // below this the curves agree to O(sigma^3)
constexpr double kNewtonTol = 1e-12;
constexpr int kNewtonMaxIter = 50;

Vec eigvec(const FluxModel& model, int family, const Vec& u) {
  return eigen_at(model, u).right.col(family);
}

double eigval(const FluxModel& model, int family, const Vec& u) {
  return eigen_at(model, u).lambdas[family];
}

// One damped Newton solve of the Rankine-Hugoniot system
//   f(u) - f(u_minus) = s (u - u_minus),  lambda_i(u) - lambda_i(u_minus) = k_i sigma
// (GNL) from the given initial guess. LD branches replace the last equation by
// the arc-length condition handled by the caller.
struct RHResult {
  Vec u;
  double s;
};

RHResult rh_newton(const FluxModel& model, int family, double sigma_target, const Vec& u_minus,
                   double lambda_minus, Vec u, double s) {
  const Vec f_minus = model.flux(u_minus);
  auto residual = [&](const Vec& uu, double ss) {
    Vec r(model.n + 1);
    r.head(model.n) = model.flux(uu) - f_minus - ss * (uu - u_minus);
    r[model.n] = eigval(model, family, uu) - lambda_minus - model.k[family] * sigma_target;
    return r;
  };
  Vec r = residual(u, s);
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    if (r.norm() <= kNewtonTol) return {u, s};
    Mat jac(model.n + 1, model.n + 1);
    jac.topLeftCorner(model.n, model.n) = model.jacobian(u) - s * Mat::Identity(model.n, model.n);
    jac.topRightCorner(model.n, 1) = -(u - u_minus);
    jac.bottomLeftCorner(1, model.n) = grad_lambda(model, family, u).transpose();
    jac(model.n, model.n) = 0.0;
    Vec step = jac.fullPivLu().solve(-r);
    double t = 1.0;
    for (int halving = 0; halving < 30; ++halving) {
      Vec u_try = u + t * step.head(model.n);
      double s_try = s + t * step[model.n];
      Vec r_try = residual(u_try, s_try);
      if (r_try.norm() < r.norm()) {
        u = u_try;
        s = s_try;
        r = r_try;
        break;
      }
      t *= 0.5;
      if (halving == 29)
        throw NewtonDivergenceError("shock_point: line search stalled", r.norm());
    }
  }
  if (r.norm() <= kNewtonTol) return {u, s};
  throw NewtonDivergenceError("shock_point: no convergence", r.norm());
}

}  // namespace

Vec rarefaction_point(const FluxModel& model, int family, double sigma, const Vec& u_minus) {
  model.require_in_domain(u_minus);
  if (sigma == 0.0) return u_minus;
  const int m = std::max(1, int(std::ceil(std::abs(sigma) / kOdeStep)));
  const double h = sigma / m;
  Vec u = u_minus;
  for (int step = 0; step < m; ++step) {
    Vec k1 = eigvec(model, family, u);
    Vec k2 = eigvec(model, family, u + 0.5 * h * k1);
    Vec k3 = eigvec(model, family, u + 0.5 * h * k2);
    Vec k4 = eigvec(model, family, u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!u.allFinite()) throw IntegrationFailureError("rarefaction_point: non-finite state");
    model.require_in_domain(u);
  }
  return u;
}

std::pair<Vec, double> shock_point(const FluxModel& model, int family, double sigma,
                                   const Vec& u_minus) {
  model.require_in_domain(u_minus);
  const double lambda_minus = eigval(model, family, u_minus);
  if (sigma == 0.0) return {u_minus, lambda_minus};

  if (model.field_kind[family] == FieldKind::LD) {
    // Contact: the RH curve coincides with the integral curve of r_i and the
    // speed equals the (constant along the curve) characteristic speed.
    return {rarefaction_point(model, family, sigma, u_minus), lambda_minus};
  }

  if (std::abs(sigma) < kSmallSigma) {
    // Shock and rarefaction curves have second-order contact; the O(sigma^3)
    // gap is below the Newton tolerance here.
    Vec u = rarefaction_point(model, family, sigma, u_minus);
    return {u, 0.5 * (lambda_minus + eigval(model, family, u))};
  }

  const int nsteps = std::max(1, int(std::ceil(std::abs(sigma) / kShockContinuation)));
  Vec u = u_minus;
  double s = lambda_minus;
  double sigma_prev = 0.0;
  for (int j = 1; j <= nsteps; ++j) {
    const double sigma_t = sigma * double(j) / nsteps;
    Vec guess = u + (sigma_t - sigma_prev) * eigvec(model, family, u);
    double s_guess = (j == 1) ? lambda_minus + 0.5 * model.k[family] * sigma_t : s;
    RHResult res = rh_newton(model, family, sigma_t, u_minus, lambda_minus, guess, s_guess);
    u = res.u;
    s = res.s;
    sigma_prev = sigma_t;
    model.require_in_domain(u);
  }
  return {u, s};
}

Vec lax_point(const FluxModel& model, int family, double sigma, const Vec& u_minus) {
  if (model.field_kind[family] == FieldKind::LD || sigma >= 0.0)
    return rarefaction_point(model, family, sigma, u_minus);
  return shock_point(model, family, sigma, u_minus).first;
}

Vec psi_compose(const FluxModel& model, const Vec& sigmas, const Vec& u_minus) {
  Vec u = u_minus;
  for (int i = 0; i < model.n; ++i) u = lax_point(model, i, sigmas[i], u);
  return u;
}

Vec shock_compose(const FluxModel& model, const Vec& q, const Vec& u_minus) {
  Vec u = u_minus;
  for (int i = 0; i < model.n; ++i) u = shock_point(model, i, q[i], u).first;
  return u;
}

namespace {

// Damped Newton on sigma for compose(sigma)(u_minus) = u_plus. Returns the
// final residual norm; sigma is updated in place.
double newton_invert(const FluxModel& model,
                     const std::function<Vec(const Vec&, const Vec&)>& compose, const Vec& u_minus,
                     const Vec& u_plus, Vec& sigma) {
  auto residual = [&](const Vec& sg) { return Vec(compose(sg, u_minus) - u_plus); };
  Vec r = residual(sigma);
  double last_norm = r.norm();
  for (int it = 0; it < kNewtonMaxIter && last_norm > kNewtonTol; ++it) {
    Mat jac(model.n, model.n);
    const double h = 1e-6;
    for (int j = 0; j < model.n; ++j) {
      Vec sp = sigma, sm = sigma;
      sp[j] += h;
      sm[j] -= h;
      jac.col(j) = (residual(sp) - residual(sm)) / (2 * h);
    }
    Vec step = jac.fullPivLu().solve(-r);
    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 30; ++halving) {
      Vec sigma_try = sigma + t * step;
      Vec r_try;
      try {
        r_try = residual(sigma_try);
      } catch (const OutOfDomainError&) {
        t *= 0.5;
        continue;
      }
      if (r_try.norm() < last_norm) {
        sigma = sigma_try;
        r = r_try;
        last_norm = r_try.norm();
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  return last_norm;
}

// Inversion with one bisection-continuation retry along the segment
// u_minus -> u_plus, warm-starting each stage from the previous strengths.
Vec invert_compose(const FluxModel& model,
                   const std::function<Vec(const Vec&, const Vec&)>& compose, const Vec& u_minus,
                   const Vec& u_plus) {
  // Initial guess: project the jump on the left eigenvectors at the midpoint.
  Vec sigma = eigen_at(model, 0.5 * (u_minus + u_plus)).left * (u_plus - u_minus);
  double res = newton_invert(model, compose, u_minus, u_plus, sigma);
  if (res <= 10 * kNewtonTol) return sigma;

  const int steps = 10;
  sigma = Vec::Zero(model.n);
  for (int j = 1; j <= steps; ++j) {
    Vec target = u_minus + (double(j) / steps) * (u_plus - u_minus);
    res = newton_invert(model, compose, u_minus, target, sigma);
    if (res > 10 * kNewtonTol)
      throw NewtonDivergenceError("strength inversion failed", res);
  }
  return sigma;
}

}  // namespace

Vec solve_strengths(const FluxModel& model, const Vec& u_minus, const Vec& u_plus) {
  model.require_in_domain(u_minus);
  model.require_in_domain(u_plus);
  if ((u_plus - u_minus).norm() == 0.0) return Vec::Zero(model.n);
  return invert_compose(
      model, [&](const Vec& s, const Vec& um) { return psi_compose(model, s, um); }, u_minus,
      u_plus);
}

Vec solve_shock_strengths(const FluxModel& model, const Vec& u_minus, const Vec& u_plus) {
  model.require_in_domain(u_minus);
  model.require_in_domain(u_plus);
  if ((u_plus - u_minus).norm() == 0.0) return Vec::Zero(model.n);
  return invert_compose(
      model, [&](const Vec& s, const Vec& um) { return shock_compose(model, s, um); }, u_minus,
      u_plus);
}

Fan riemann_fan(const FluxModel& model, const Vec& u_minus, const Vec& u_plus, double eps) {
  if (!(eps > 0.0)) throw BadParameterError("riemann_fan: eps must be positive");
  Fan fan;
  if ((u_plus - u_minus).norm() < 1e-14) return fan;
  Vec sigma = solve_strengths(model, u_minus, u_plus);
  Vec u = u_minus;
  for (int i = 0; i < model.n; ++i) {
    const double s_i = sigma[i];
    if (std::abs(s_i) < 1e-14) continue;
    if (model.field_kind[i] == FieldKind::LD) {
      Wave w;
      w.family = i;
      w.strength = s_i;
      w.kind = WaveKind::Contact;
      w.left = u;
      w.right = rarefaction_point(model, i, s_i, u);
      w.speed = w.speed_lo = w.speed_hi = eigval(model, i, u);
      u = w.right;
      fan.waves.push_back(std::move(w));
    } else if (s_i < 0.0) {
      auto [u_next, speed] = shock_point(model, i, s_i, u);
      Wave w;
      w.family = i;
      w.strength = s_i;
      w.kind = WaveKind::Shock;
      w.left = u;
      w.right = u_next;
      w.speed = w.speed_lo = w.speed_hi = speed;
      u = u_next;
      fan.waves.push_back(std::move(w));
    } else {
      const int pieces = std::max(1, int(std::ceil(s_i / eps)));
      const double ds = s_i / pieces;
      for (int p = 0; p < pieces; ++p) {
        Wave w;
        w.family = i;
        w.strength = ds;
        w.kind = WaveKind::RarefactionPiece;
        w.left = u;
        w.right = rarefaction_point(model, i, ds, u);
        w.speed_lo = eigval(model, i, w.left);
        w.speed_hi = eigval(model, i, w.right);
        w.speed = w.speed_hi;  // right-state characteristic speed convention
        u = w.right;
        fan.waves.push_back(std::move(w));
      }
    }
  }
  return fan;
}

}  // namespace hypstab
