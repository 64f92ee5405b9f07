#include "hypstab/flux_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypstab {

namespace {

constexpr double kCoincidenceTol = 1e-12;

// Raw eigen decomposition: real eigenvalues sorted increasing, right
// eigenvectors with a deterministic orientation (largest-magnitude component
// positive).
EigenData raw_eigen(const FluxModel& model, const Vec& u) {
  if (model.analytic_eigen) return model.analytic_eigen(u);

  Eigen::EigenSolver<Mat> solver(model.jacobian(u));
  if (solver.info() != Eigen::Success)
    throw NonHyperbolicError("eigen decomposition failed");
  Vec lam = solver.eigenvalues().real();
  Vec lam_imag = solver.eigenvalues().imag();
  for (int i = 0; i < model.n; ++i)
    if (std::abs(lam_imag[i]) > kCoincidenceTol)
      throw NonHyperbolicError("complex eigenvalue");

  std::vector<int> order(model.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lam[a] < lam[b]; });

  EigenData ed;
  ed.lambdas.resize(model.n);
  ed.right.resize(model.n, model.n);
  for (int i = 0; i < model.n; ++i) {
    ed.lambdas[i] = lam[order[i]];
    Vec r = solver.eigenvectors().col(order[i]).real();
    int imax = 0;
    for (int c = 1; c < model.n; ++c)
      if (std::abs(r[c]) > std::abs(r[imax])) imax = c;
    if (r[imax] < 0) r = -r;
    ed.right.col(i) = r;
  }
  return ed;
}

}  // namespace

void FluxModel::require_in_domain(const Vec& u) const {
  if (!in_domain(u))
    throw OutOfDomainError(id + ": state at distance " + std::to_string((u - origin).norm()) +
                           " exceeds domain radius " + std::to_string(domain_radius));
}

double FluxModel::fast_speed() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const Vec& u : domain_samples(*this, 256)) {
    EigenData ed = raw_eigen(*this, u);
    m = std::max(m, ed.lambdas[n - 1]);
  }
  return m + 1.0;
}

Vec grad_lambda(const FluxModel& model, int family, const Vec& u) {
  const double h = 1e-5 * std::max(1.0, u.norm());
  Vec g(model.n);
  for (int j = 0; j < model.n; ++j) {
    Vec up = u, um = u;
    up[j] += h;
    um[j] -= h;
    g[j] = (raw_eigen(model, up).lambdas[family] - raw_eigen(model, um).lambdas[family]) / (2 * h);
  }
  return g;
}

EigenData eigen_at(const FluxModel& model, const Vec& u) {
  model.require_in_domain(u);
  EigenData ed = raw_eigen(model, u);
  for (int i = 0; i + 1 < model.n; ++i)
    if (ed.lambdas[i + 1] - ed.lambdas[i] < kCoincidenceTol)
      throw NonHyperbolicError(model.id + ": coincident eigenvalues");

  for (int i = 0; i < model.n; ++i) {
    Vec r = ed.right.col(i);
    if (model.field_kind[i] == FieldKind::GNL) {
      double g = grad_lambda(model, i, u).dot(r);
      if (std::abs(g) < 1e-10)
        throw NonHyperbolicError(model.id + ": vanishing grad(lambda).r on a GNL field");
      ed.right.col(i) = r * (model.k[i] / g);
    } else {
      ed.right.col(i) = r / r.norm();  // arc-length parametrization
    }
  }
  ed.left = ed.right.inverse();
  return ed;
}

std::vector<Vec> domain_samples(const FluxModel& model, int samples) {
  // Halton-style sequence mapped into the cube inscribed in the domain ball.
  static const int primes[] = {2, 3, 5, 7, 11, 13};
  auto halton = [](int index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
      f /= base;
      r += f * (index % base);
      index /= base;
    }
    return r;
  };
  const double half = model.domain_radius / std::sqrt(double(model.n));
  std::vector<Vec> out;
  out.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    Vec u = model.origin;
    for (int j = 0; j < model.n; ++j)
      u[j] += (2.0 * halton(s + 1, primes[j % 6]) - 1.0) * half;
    out.push_back(u);
  }
  return out;
}

HyperbolicityReport check_hyperbolicity(const FluxModel& model, int samples) {
  if (samples < 1) throw BadParameterError("check_hyperbolicity: samples must be >= 1");
  HyperbolicityReport rep;
  rep.min_gap = std::numeric_limits<double>::infinity();
  rep.max_duality_error = 0.0;
  rep.max_gnl_error = 0.0;
  for (const Vec& u : domain_samples(model, samples)) {
    EigenData ed = eigen_at(model, u);
    for (int i = 0; i + 1 < model.n; ++i)
      rep.min_gap = std::min(rep.min_gap, ed.lambdas[i + 1] - ed.lambdas[i]);
    Mat d = ed.left * ed.right - Mat::Identity(model.n, model.n);
    rep.max_duality_error = std::max(rep.max_duality_error, d.cwiseAbs().maxCoeff());
    for (int i = 0; i < model.n; ++i)
      if (model.field_kind[i] == FieldKind::GNL)
        rep.max_gnl_error = std::max(
            rep.max_gnl_error, std::abs(grad_lambda(model, i, u).dot(ed.right.col(i)) - model.k[i]));
  }
  rep.ok = rep.min_gap > 0 && rep.max_duality_error <= 1e-9 && rep.max_gnl_error <= 1e-8;
  return rep;
}

FluxModel burgers_model(double domain_radius) {
  FluxModel m;
  m.n = 1;
  m.id = "burgers";
  m.flux = [](const Vec& u) {
    Vec f(1);
    f[0] = 0.5 * u[0] * u[0];
    return f;
  };
  m.jacobian = [](const Vec& u) {
    Mat a(1, 1);
    a(0, 0) = u[0];
    return a;
  };
  m.field_kind = {FieldKind::GNL};
  m.k = Vec::Ones(1);
  m.domain_radius = domain_radius;
  m.origin = Vec::Zero(1);
  m.analytic_eigen = [](const Vec& u) {
    EigenData ed;
    ed.lambdas = u;
    ed.right = Mat::Ones(1, 1);
    return ed;
  };
  return m;
}

FluxModel p_system_model(double gamma, double domain_radius) {
  if (!(gamma > 1.0)) throw BadParameterError("p_system: gamma must exceed 1");
  FluxModel m;
  m.n = 2;
  m.id = "p_system";
  // State (v, u), flux (-u, p(v)) with p(v) = v^-gamma; hyperbolic for v > 0.
  m.flux = [gamma](const Vec& w) {
    Vec f(2);
    f[0] = -w[1];
    f[1] = std::pow(w[0], -gamma);
    return f;
  };
  m.jacobian = [gamma](const Vec& w) {
    Mat a(2, 2);
    a(0, 0) = 0.0;
    a(0, 1) = -1.0;
    a(1, 0) = -gamma * std::pow(w[0], -gamma - 1.0);
    a(1, 1) = 0.0;
    return a;
  };
  m.field_kind = {FieldKind::GNL, FieldKind::GNL};
  m.k = Vec::Ones(2);
  m.domain_radius = domain_radius;
  m.origin = Vec::Zero(2);
  m.origin[0] = 1.0;
  m.analytic_eigen = [gamma](const Vec& w) {
    const double c = std::sqrt(gamma * std::pow(w[0], -gamma - 1.0));
    EigenData ed;
    ed.lambdas.resize(2);
    ed.lambdas << -c, c;
    ed.right.resize(2, 2);
    // r_i = (1, -lambda_i); orientation fixed here, rescaled in eigen_at.
    ed.right << 1.0, 1.0, c, -c;
    return ed;
  };
  return m;
}

FluxModel linear_model(const Mat& a, double domain_radius) {
  const int n = int(a.rows());
  if (n < 1 || a.cols() != n) throw BadParameterError("linear: matrix must be square");
  {
    Eigen::EigenSolver<Mat> solver(a);
    for (int i = 0; i < n; ++i)
      if (std::abs(solver.eigenvalues()[i].imag()) > kCoincidenceTol)
        throw BadParameterError("linear: matrix has complex eigenvalues");
    Vec lam = solver.eigenvalues().real();
    std::sort(lam.data(), lam.data() + n);
    for (int i = 0; i + 1 < n; ++i)
      if (lam[i + 1] - lam[i] < kCoincidenceTol)
        throw BadParameterError("linear: eigenvalues not distinct");
  }
  FluxModel m;
  m.n = n;
  m.id = "linear";
  m.flux = [a](const Vec& u) { return Vec(a * u); };
  m.jacobian = [a](const Vec&) { return a; };
  m.field_kind.assign(n, FieldKind::LD);
  m.k = Vec::Ones(n);
  m.domain_radius = domain_radius;
  m.origin = Vec::Zero(n);
  return m;
}

}  // namespace hypstab
