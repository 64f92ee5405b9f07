#include <cmath>

#include "doctest.h"

#include "hypstab/generators.hpp"
#include "hypstab/riemann.hpp"

using namespace hypstab;

namespace {
Vec scalar(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}
}  // namespace

TEST_CASE("burgers shock: strength, speed, entropy") {
  FluxModel m = burgers_model();
  Fan fan = riemann_fan(m, scalar(0.2), scalar(-0.1), 0.5);
  REQUIRE(fan.waves.size() == 1);
  const Wave& w = fan.waves[0];
  CHECK(w.kind == WaveKind::Shock);
  CHECK(w.strength == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(w.speed == doctest::Approx(0.05).epsilon(1e-12));  // (u- + u+) / 2
  CHECK(w.left[0] == doctest::Approx(0.2));
  CHECK(w.right[0] == doctest::Approx(-0.1));
}

TEST_CASE("burgers rarefaction splits into pieces of bounded strength") {
  FluxModel m = burgers_model();
  const double eps = 0.1;
  Fan fan = riemann_fan(m, scalar(-0.1), scalar(0.2), eps);
  REQUIRE(fan.waves.size() >= 3);
  double total = 0.0;
  double prev_speed = -1e100;
  for (const Wave& w : fan.waves) {
    CHECK(w.kind == WaveKind::RarefactionPiece);
    CHECK(w.strength > 0.0);
    CHECK(w.strength <= eps + 1e-12);
    CHECK(w.speed >= prev_speed);
    CHECK(w.speed == doctest::Approx(w.right[0]).epsilon(1e-10));
    prev_speed = w.speed;
    total += w.strength;
  }
  CHECK(total == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(fan.waves.back().right[0] == doctest::Approx(0.2).epsilon(1e-10));
}

TEST_CASE("p-system curve round trips") {
  FluxModel m = p_system_model(1.4);
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Vec u = random_state(m, rng, 0.4);
    Vec s = random_strengths(m, rng, 0.05);

    Vec up = psi_compose(m, s, u);
    Vec back = solve_strengths(m, u, up);
    CHECK((back - s).norm() < 1e-9);

    Vec uq = shock_compose(m, s, u);
    Vec qb = solve_shock_strengths(m, u, uq);
    CHECK((qb - s).norm() < 1e-9);
  }
}

TEST_CASE("rankine-hugoniot residual on shock branches") {
  FluxModel m = p_system_model(1.4);
  Vec u = m.origin;
  for (int family : {0, 1}) {
    for (double sigma : {-0.01, -0.05, -0.12}) {
      auto [up, speed] = shock_point(m, family, sigma, u);
      Vec res = m.flux(up) - m.flux(u) - speed * (up - u);
      CHECK(res.norm() < 1e-9);
    }
  }
}

TEST_CASE("p-system fans come out in ascending family order") {
  FluxModel m = p_system_model(1.4);
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Vec um = random_state(m, rng, 0.3);
    Vec up = random_state(m, rng, 0.3);
    Fan fan = riemann_fan(m, um, up, 0.02);
    int prev_family = -1;
    double prev_speed = -1e100;
    for (const Wave& w : fan.waves) {
      CHECK(w.family >= prev_family);
      if (w.family == prev_family) CHECK(w.speed >= prev_speed - 1e-12);
      prev_family = w.family;
      prev_speed = w.speed;
    }
    // the fan glues u- to u+
    CHECK((fan.waves.empty() ? um : fan.waves.back().right - up).norm() < 1e-9);
  }
}

TEST_CASE("linear model yields contact discontinuities") {
  Mat a(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  FluxModel m = linear_model(a);
  Vec um(2), up(2);
  um << 0.1, 0.0;
  up << -0.05, 0.1;
  Fan fan = riemann_fan(m, um, up, 0.5);
  REQUIRE(fan.waves.size() == 2);
  for (const Wave& w : fan.waves) CHECK(w.kind == WaveKind::Contact);
  CHECK(fan.waves[0].speed == doctest::Approx(-1.0));
  CHECK(fan.waves[1].speed == doctest::Approx(1.0));
  CHECK((fan.waves.back().right - up).norm() < 1e-10);
}

TEST_CASE("lax curve matches its branches") {
  FluxModel m = p_system_model(1.4);
  Vec u = m.origin;
  CHECK((lax_point(m, 0, 0.03, u) - rarefaction_point(m, 0, 0.03, u)).norm() < 1e-12);
  CHECK((lax_point(m, 0, -0.03, u) - shock_point(m, 0, -0.03, u).first).norm() < 1e-12);
}
