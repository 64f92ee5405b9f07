#include <cmath>

#include "doctest.h"

#include "hypstab/flux_model.hpp"

using namespace hypstab;

namespace {
Vec scalar(double x) {
  Vec v(1);
  v[0] = x;
  return v;
}
}  // namespace

TEST_CASE("burgers model basics") {
  FluxModel m = burgers_model();
  CHECK(m.n == 1);
  CHECK(m.id == "burgers");
  CHECK(m.field_kind[0] == FieldKind::GNL);

  CHECK(m.flux(scalar(0.3))[0] == doctest::Approx(0.045).epsilon(1e-14));
  CHECK(m.jacobian(scalar(0.3))(0, 0) == doctest::Approx(0.3).epsilon(1e-14));

  EigenData ed = eigen_at(m, scalar(0.3));
  CHECK(ed.lambdas[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK((ed.left * ed.right - Mat::Identity(1, 1)).norm() < 1e-12);

  // sigma parametrization: grad(lambda) . r = k = 1
  Vec g = grad_lambda(m, 0, scalar(0.1));
  CHECK(g.dot(ed.right.col(0)) == doctest::Approx(m.k[0]).epsilon(1e-6));
}

TEST_CASE("p-system eigenstructure at the origin") {
  FluxModel m = p_system_model(1.4);
  CHECK(m.n == 2);
  CHECK(m.field_kind[0] == FieldKind::GNL);
  CHECK(m.field_kind[1] == FieldKind::GNL);

  EigenData ed = eigen_at(m, m.origin);
  const double c = std::sqrt(1.4);  // sound speed at v = 1
  CHECK(ed.lambdas[0] == doctest::Approx(-c).epsilon(1e-12));
  CHECK(ed.lambdas[1] == doctest::Approx(c).epsilon(1e-12));
  CHECK((ed.left * ed.right - Mat::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("linear model is linearly degenerate with matrix eigenvalues") {
  Mat a(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  FluxModel m = linear_model(a);
  CHECK(m.field_kind[0] == FieldKind::LD);
  CHECK(m.field_kind[1] == FieldKind::LD);

  Vec u(2);
  u << 0.05, -0.02;
  EigenData ed = eigen_at(m, u);
  CHECK(ed.lambdas[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ed.lambdas[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((m.flux(u) - a * u).norm() < 1e-14);
}

TEST_CASE("hyperbolicity report") {
  for (const FluxModel& m : {burgers_model(), p_system_model(1.4)}) {
    HyperbolicityReport rep = check_hyperbolicity(m, 200);
    CHECK(rep.ok);
    CHECK(rep.max_duality_error < 1e-9);
    CHECK(rep.max_gnl_error < 1e-4);
    if (m.n > 1) CHECK(rep.min_gap > 0.0);
  }
}

TEST_CASE("domain enforcement") {
  FluxModel m = p_system_model(1.4, 0.2);
  Vec far = m.origin;
  far[0] += 0.5;
  CHECK(!m.in_domain(far));
  CHECK_THROWS_AS(m.require_in_domain(far), OutOfDomainError);
  CHECK(m.in_domain(m.origin));
  CHECK(m.fast_speed() > std::sqrt(1.4));
}
