#ifndef HYPSTAB_MEASURES_HPP
#define HYPSTAB_MEASURES_HPP

#include <vector>

#include "hypstab/pcw.hpp"

namespace hypstab {

/// One affine piece: value(x) = value0 + slope * (x - a) on [a, b).
struct BVPiece {
  double a, b;
  Vec value0;
  Vec slope;
};

/// Right-continuous function of bounded variation: finitely many affine
/// pieces plus jumps, equal to `background` outside the pieces.
struct BVFunction {
  std::vector<BVPiece> pieces;  // sorted, disjoint
  Vec background;

  static BVFunction from_pcw(const PiecewiseConstantFn& u);

  Vec at(double x) const;
  Vec left_limit(double x) const;
  double total_variation() const;
  bool piecewise_constant() const;
  std::vector<double> breakpoints() const;  // piece endpoints, sorted unique
};

double l1_distance(const BVFunction& a, const BVFunction& b);

/// Signed measure on the line: atoms plus a piecewise-constant density.
struct SignedMeasure1D {
  std::vector<std::pair<double, double>> atoms;  // (location, mass), sorted
  std::vector<double> grid;                      // density cell boundaries
  std::vector<double> density;                   // one value per cell

  double total() const;
  double total_variation() const;
  SignedMeasure1D abs() const;
  SignedMeasure1D positive_part() const;
  SignedMeasure1D negative_part() const;

  /// Measure of the interval with the given endpoint inclusions.
  double interval(double a, double b, bool include_a, bool include_b) const;
  double cumulative_closed(double x) const;  // mu(]-inf, x])
  double cumulative_open(double x) const;    // mu(]-inf, x[)

  void sort_atoms();
};

/// (alpha x beta)({(x,y) : x < y}), exact on the representation.
double pair_integral_half_plane(const SignedMeasure1D& alpha, const SignedMeasure1D& beta);

struct WaveMeasureSet {
  std::vector<SignedMeasure1D> mu;       // one per family
  std::vector<SignedMeasure1D> mu_pos;   // Jordan parts
  std::vector<SignedMeasure1D> mu_neg;
  SignedMeasure1D tv_measure;            // |Du| of the underlying function
};

WaveMeasureSet wave_measures(const FluxModel& model, const BVFunction& u);

/// Q-hat via the product measure rho.
double interaction_measure(const FluxModel& model, const WaveMeasureSet& wm);

/// Upsilon-hat = sum_i |mu_i|(R) + C0 Q-hat.
double upsilon_hat(const FluxModel& model, const BVFunction& u, const StabilityConstants& consts);

/// A-hat_i(x) for the pair (u, u~); the GNL same-family term follows the sign
/// of q_i(x) (q = 0 on the q >= 0 branch).
double a_hat(const FluxModel& model, const WaveMeasureSet& wm_u, const WaveMeasureSet& wm_ut,
             int family, double x, double q_sign);

/// Xi-hat: exact interval sums on piecewise constant pairs, adaptive 5-point
/// Gauss-Legendre elsewhere.
double xi_hat(const FluxModel& model, const BVFunction& u, const BVFunction& u_tilde,
              const StabilityConstants& consts);

/// The explicit approximating step functions v_nu.
PiecewiseConstantFn approx_sequence(const FluxModel& model, const BVFunction& u, int nu);

struct GapBound {
  double lhs;  // max_i |E_i(u(a+), u(b-)) - mu_i(]a,b[)|
  double rhs;  // diam(u(]a,b[)) * |mu|(]a,b[)
};
GapBound gap_bound(const FluxModel& model, const BVFunction& u, double a, double b);

}  // namespace hypstab

#endif
