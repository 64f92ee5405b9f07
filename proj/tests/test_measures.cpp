#include <cmath>

#include "doctest.h"

#include "hypstab/generators.hpp"
#include "hypstab/measures.hpp"

using namespace hypstab;

namespace {
SignedMeasure1D atom(double x, double mass) {
  SignedMeasure1D mu;
  mu.atoms = {{x, mass}};
  return mu;
}
}  // namespace

TEST_CASE("half-plane pair integral on atoms") {
  CHECK(pair_integral_half_plane(atom(0.0, 2.0), atom(1.0, 3.0)) == doctest::Approx(6.0));
  CHECK(pair_integral_half_plane(atom(1.0, 3.0), atom(0.0, 2.0)) == doctest::Approx(0.0));
  // the diagonal x = y is excluded
  CHECK(pair_integral_half_plane(atom(0.5, 2.0), atom(0.5, 3.0)) == doctest::Approx(0.0));
}

TEST_CASE("signed measure bookkeeping") {
  SignedMeasure1D mu;
  mu.atoms = {{0.0, 1.5}, {2.0, -0.5}};
  CHECK(mu.total() == doctest::Approx(1.0));
  CHECK(mu.total_variation() == doctest::Approx(2.0));
  CHECK(mu.abs().total() == doctest::Approx(2.0));
  CHECK(mu.positive_part().total() == doctest::Approx(1.5));
  CHECK(mu.negative_part().total() == doctest::Approx(0.5));
  CHECK(mu.interval(0.0, 2.0, true, true) == doctest::Approx(1.0));
  CHECK(mu.interval(0.0, 2.0, false, false) == doctest::Approx(0.0));
  CHECK(mu.cumulative_closed(0.0) == doctest::Approx(1.5));
  CHECK(mu.cumulative_open(0.0) == doctest::Approx(0.0));
}

TEST_CASE("measure form of Q matches the jump form on step functions") {
  for (FluxModel m : {burgers_model(), p_system_model(1.4)}) {
    Rng rng(7);
    for (int trial = 0; trial < 8; ++trial) {
      PiecewiseConstantFn u = random_step_function(m, rng, 5, 0.02);
      const double q_jump = interaction_potential(m, jump_strengths(m, u));
      const double q_meas = interaction_measure(m, wave_measures(m, BVFunction::from_pcw(u)));
      CHECK(q_meas == doctest::Approx(q_jump).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("measure forms of Upsilon and Phi match the jump forms") {
  FluxModel m = p_system_model(1.4);
  StabilityConstants cc;
  Rng rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    PiecewiseConstantFn v = random_step_function(m, rng, 4, 0.02);
    PiecewiseConstantFn vt = random_step_function(m, rng, 4, 0.02);
    CHECK(upsilon_hat(m, BVFunction::from_pcw(v), cc) ==
          doctest::Approx(glimm_total(m, v, cc)).epsilon(1e-10));
    CHECK(xi_hat(m, BVFunction::from_pcw(v), BVFunction::from_pcw(vt), cc) ==
          doctest::Approx(stability_phi(m, v, vt, cc)).epsilon(1e-9));
  }
}

TEST_CASE("approximating sequence converges in L1") {
  FluxModel m = p_system_model(1.4);
  Rng rng(21);
  BVFunction u = random_bv_function(m, rng, 3, 0.02);
  double prev = 1e100;
  for (int nu : {10, 40, 160}) {
    PiecewiseConstantFn v = approx_sequence(m, u, nu);
    const double err = l1_distance(u, BVFunction::from_pcw(v));
    CHECK(err < prev + 1e-15);
    prev = err;
  }
  CHECK(prev < 5e-4);
}

TEST_CASE("approximants respect the total variation up to a constant") {
  FluxModel m = p_system_model(1.4);
  Rng rng(22);
  BVFunction u = random_bv_function(m, rng, 3, 0.02);
  const double tv = u.total_variation();
  for (int nu : {10, 80}) {
    PiecewiseConstantFn v = approx_sequence(m, u, nu);
    CHECK(BVFunction::from_pcw(v).total_variation() < 4.0 * tv + 1e-12);
  }
}

TEST_CASE("strength-versus-measure gap bound") {
  // scalar case: the wave measure is exactly Du, so the gap vanishes
  FluxModel b = burgers_model();
  Rng rng(31);
  BVFunction u = random_bv_function(b, rng, 3, 0.05);
  GapBound g = gap_bound(b, u, 0.1, 0.9);
  CHECK(g.lhs < 1e-12);
  CHECK(g.lhs <= g.rhs + 1e-12);

  FluxModel p = p_system_model(1.4);
  BVFunction w = random_bv_function(p, rng, 3, 0.02);
  for (auto [a, bnd] : {std::pair{0.1, 0.9}, std::pair{0.25, 0.6}}) {
    GapBound gp = gap_bound(p, w, a, bnd);
    CHECK(gp.lhs <= gp.rhs + 1e-12);
  }
}
