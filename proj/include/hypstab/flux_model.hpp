#ifndef HYPSTAB_FLUX_MODEL_HPP
#define HYPSTAB_FLUX_MODEL_HPP

#include <functional>
#include <vector>

#include "hypstab/types.hpp"

namespace hypstab {

enum class FieldKind { GNL, LD };

/// Eigenstructure of the flux Jacobian at one state. Right eigenvectors are
/// the columns of `right`, left eigenvectors the rows of `left`, normalized
/// so that left.row(i) * right.col(j) = delta_ij.
struct EigenData {
  Vec lambdas;
  Mat right;
  Mat left;
};

struct HyperbolicityReport {
  double min_gap;            // min over samples of lambda_{i+1} - lambda_i
  double max_duality_error;  // max |l_i . r_j - delta_ij|
  double max_gnl_error;      // max |grad(lambda_i).r_i - k_i| over GNL fields
  bool ok;
};

/// A strictly hyperbolic system of conservation laws: the flux f, its
/// Jacobian, the genuinely-nonlinear / linearly-degenerate classification of
/// each field and the normalization constants k_j of the sigma
/// parametrization. The admissible states are the closed ball of radius
/// `domain_radius` around `origin`; piecewise constant data take the value
/// `origin` outside a compact interval.
struct FluxModel {
  int n = 0;
  std::function<Vec(const Vec&)> flux;
  std::function<Mat(const Vec&)> jacobian;
  std::vector<FieldKind> field_kind;
  Vec k;                       // per-family normalization, positive
  double domain_radius = 0.5;
  Vec origin;
  std::string id;

  // Analytic eigenstructure (unnormalized right eigenvectors with a
  // consistent orientation); built-ins provide it so they are
  // bit-reproducible. Empty for user models, which fall back to the
  // iterative real-Schur path.
  std::function<EigenData(const Vec&)> analytic_eigen;

  bool in_domain(const Vec& u) const {
    return (u - origin).norm() <= domain_radius * (1.0 + 1e-12);
  }
  void require_in_domain(const Vec& u) const;

  /// Strict upper bound on every characteristic speed in the domain, used as
  /// the speed of non-physical fronts.
  double fast_speed() const;
};

/// Built-in models.
FluxModel burgers_model(double domain_radius = 0.5);
FluxModel p_system_model(double gamma, double domain_radius = 0.2);
FluxModel linear_model(const Mat& a, double domain_radius = 0.5);

EigenData eigen_at(const FluxModel& model, const Vec& u);

/// Gradient of lambda_i by central differences, step 1e-5 * max(1,|u|).
Vec grad_lambda(const FluxModel& model, int family, const Vec& u);

/// Deterministic low-discrepancy sampling of the domain ball.
std::vector<Vec> domain_samples(const FluxModel& model, int samples);

HyperbolicityReport check_hyperbolicity(const FluxModel& model, int samples);

}  // namespace hypstab

#endif
