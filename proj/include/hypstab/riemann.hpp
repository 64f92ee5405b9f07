#ifndef HYPSTAB_RIEMANN_HPP
#define HYPSTAB_RIEMANN_HPP

#include <utility>
#include <vector>

#include "hypstab/flux_model.hpp"

namespace hypstab {

enum class WaveKind { Shock, RarefactionPiece, Contact, NonPhysical };

struct Wave {
  int family;       // 0-based
  double strength;  // signed sigma
  WaveKind kind;
  Vec left, right;
  double speed;      // tracking speed (RH speed, or lambda of the right state)
  double speed_lo;   // speed interval for rarefaction pieces; == speed otherwise
  double speed_hi;
};

/// Discretized self-similar solution of a Riemann problem.
struct Fan {
  std::vector<Wave> waves;
};

/// State reached integrating u' = r_i(u) from u_minus over parameter length
/// sigma, with r_i normalized per field kind.
Vec rarefaction_point(const FluxModel& model, int family, double sigma, const Vec& u_minus);

/// Rankine-Hugoniot branch: returns (state, shock speed). GNL branches are
/// parametrized by the lambda_i difference, LD branches by arc-length (the
/// contact coincides with the rarefaction curve).
std::pair<Vec, double> shock_point(const FluxModel& model, int family, double sigma,
                                   const Vec& u_minus);

/// Lax curve: rarefaction branch for sigma >= 0, shock branch otherwise.
Vec lax_point(const FluxModel& model, int family, double sigma, const Vec& u_minus);

/// Psi(sigma)(u-): composition of Lax curves in ascending family order.
Vec psi_compose(const FluxModel& model, const Vec& sigmas, const Vec& u_minus);

/// E(u-,u+): wave strengths solving Psi(sigma)(u-) = u+.
Vec solve_strengths(const FluxModel& model, const Vec& u_minus, const Vec& u_plus);

/// S(q)(u-): composition of Rankine-Hugoniot branches (both signs allowed).
Vec shock_compose(const FluxModel& model, const Vec& q, const Vec& u_minus);

/// q(u-,u+): strengths solving S(q)(u-) = u+.
Vec solve_shock_strengths(const FluxModel& model, const Vec& u_minus, const Vec& u_plus);

/// Riemann fan with every GNL rarefaction split into pieces of strength <= eps
/// traveling at the characteristic speed of their right state.
Fan riemann_fan(const FluxModel& model, const Vec& u_minus, const Vec& u_plus, double eps);

}  // namespace hypstab

#endif
