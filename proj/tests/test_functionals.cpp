#include <cmath>

#include "doctest.h"

#include "hypstab/generators.hpp"
#include "hypstab/pcw.hpp"
#include "hypstab/riemann.hpp"

using namespace hypstab;

namespace {
Vec scalar(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}

PiecewiseConstantFn steps(std::vector<double> xs, std::vector<double> vals) {
  PiecewiseConstantFn u;
  u.xs = std::move(xs);
  for (double v : vals) u.values.push_back(scalar(v));
  u.background = scalar(0.0);
  return u;
}
}  // namespace

TEST_CASE("single negative box: V, Q, Upsilon, Phi") {
  FluxModel m = burgers_model();
  StabilityConstants cc;  // C0 = 4, kappa1 = kappa2 = 1
  PiecewiseConstantFn v = PiecewiseConstantFn::constant(scalar(0.0));
  PiecewiseConstantFn vt = steps({0.0, 1.0}, {-0.1});

  JumpTable table = jump_strengths(m, vt);
  REQUIRE(table.xs.size() == 2);
  CHECK(table.sigma[0][0] == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(table.sigma[1][0] == doctest::Approx(0.1).epsilon(1e-12));

  CHECK(linear_functional(table) == doctest::Approx(0.2).epsilon(1e-11));
  // the shock at 0 approaches the rarefaction jump at 1: Q = 0.1 * 0.1
  CHECK(interaction_potential(m, table) == doctest::Approx(0.01).epsilon(1e-10));
  CHECK(glimm_total(m, vt, cc) == doctest::Approx(0.24).epsilon(1e-10));

  // weights: W = 1 + A + Q(v) + Q(vt) = 1.11 at the shock, 1.01 at the
  // rarefaction side (the A branch with q >= 0 drops the same-family term)
  CHECK(stability_phi(m, v, vt, cc) == doctest::Approx(0.111).epsilon(1e-10));
  CHECK(stability_phi(m, vt, v, cc) == doctest::Approx(0.111).epsilon(1e-10));
}

TEST_CASE("phi vanishes on identical arguments") {
  FluxModel m = p_system_model(1.4);
  StabilityConstants cc;
  Rng rng(3);
  PiecewiseConstantFn u = random_step_function(m, rng, 5, 0.02);
  CHECK(stability_phi(m, u, u, cc) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("phi comparable to the L1 distance") {
  FluxModel m = p_system_model(1.4);
  StabilityConstants cc;
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    PiecewiseConstantFn v = random_step_function(m, rng, 4, 0.02);
    PiecewiseConstantFn vt = random_step_function(m, rng, 4, 0.02);
    const double phi = stability_phi(m, v, vt, cc);
    const double l1 = l1_distance(v, vt);
    CHECK(phi >= 0.0);
    if (l1 > 0.0) {
      CHECK(phi / l1 > 0.1);
      CHECK(phi / l1 < 10.0);
    }
  }
}

TEST_CASE("approaching-pair rules in Q") {
  FluxModel m = burgers_model();
  // jumps +0.1, +0.1, -0.2: the two rarefaction jumps never approach each
  // other, each approaches the closing shock
  CHECK(interaction_potential(m, jump_strengths(m, steps({0.0, 1.0, 2.0}, {0.1, 0.2}))) ==
        doctest::Approx(0.04).epsilon(1e-10));
  // a shock approaches everything in its own family
  PiecewiseConstantFn two_shocks = steps({0.0, 1.0, 2.0}, {-0.1, -0.3});
  // jumps: -0.1, -0.2, +0.3  ->  Q = 0.02 + 0.03 + 0.06
  CHECK(interaction_potential(m, jump_strengths(m, two_shocks)) ==
        doctest::Approx(0.11).epsilon(1e-10));
}

TEST_CASE("transversal pairs approach only when faster family is on the left") {
  FluxModel m = p_system_model(1.4);
  Vec mid = lax_point(m, 1, -0.04, m.origin);  // one 2-shock
  PiecewiseConstantFn u;
  u.background = m.origin;
  u.xs = {0.0, 1.0};
  u.values = {mid};
  // jump at 0 is a pure 2-shock, jump at 1 its inverse: same-family approach only
  JumpTable table = jump_strengths(m, u);
  CHECK(std::abs(table.sigma[0][0]) < 1e-9);
  CHECK(table.sigma[0][1] == doctest::Approx(-0.04).epsilon(1e-9));
  CHECK(interaction_potential(m, table) == doctest::Approx(0.04 * 0.04).epsilon(0.01));
}

TEST_CASE("side sums split total strength at a point") {
  FluxModel m = burgers_model();
  JumpTable table = jump_strengths(m, steps({0.0, 1.0}, {-0.1}));
  SideSums s = side_sums(table, m.n, 0.5);
  CHECK(s.minus[0] == doctest::Approx(0.1).epsilon(1e-11));
  CHECK(s.plus[0] == doctest::Approx(0.1).epsilon(1e-11));
  SideSums left = side_sums(table, m.n, -1.0);
  CHECK(left.minus[0] == doctest::Approx(0.0));
  CHECK(left.plus[0] == doctest::Approx(0.2).epsilon(1e-11));
}

TEST_CASE("sample coarsening keeps sampled values") {
  PiecewiseConstantFn u = steps({0.0, 1.0}, {-0.1});
  PiecewiseConstantFn c = sample_coarsen(u, {-1.0, 0.5, 2.0}, {-0.5, 0.75});
  CHECK(c.at(0.0)[0] == doctest::Approx(0.0));    // sampled the background cell
  CHECK(c.at(0.75)[0] == doctest::Approx(-0.1));  // sampled inside the box
  CHECK(c.at(2.5)[0] == doctest::Approx(0.0));
  FluxModel m = burgers_model();
  CHECK(linear_functional(jump_strengths(m, c)) == doctest::Approx(0.2).epsilon(1e-10));
}
