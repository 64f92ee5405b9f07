import math

import numpy as np
import pytest

import hypstab as h


@pytest.fixture
def burgers():
    return h.burgers()


def box(value, lo=0.0, hi=1.0):
    return h.PiecewiseConstantFn([lo, hi], [np.array([value])], np.array([0.0]))


def test_models(burgers):
    assert burgers.n == 1
    ps = h.p_system(1.4)
    assert ps.n == 2
    ed = h.eigen_at(ps, ps.origin)
    assert ed.lambdas[0] == pytest.approx(-math.sqrt(1.4), rel=1e-12)
    rep = h.check_hyperbolicity(ps, 100)
    assert rep.ok


def test_riemann_fan(burgers):
    fan = h.riemann_fan(burgers, np.array([0.2]), np.array([-0.1]), 0.5)
    assert len(fan.waves) == 1
    w = fan.waves[0]
    assert w.kind == h.WaveKind.Shock
    assert w.strength == pytest.approx(-0.3, rel=1e-12)
    assert w.speed == pytest.approx(0.05, rel=1e-10)


def test_functionals(burgers):
    cc = h.StabilityConstants()
    v = h.PiecewiseConstantFn([], [], np.array([0.0]))
    vt = box(-0.1)
    assert h.glimm_total(burgers, vt, cc) == pytest.approx(0.24, rel=1e-10)
    phi = h.stability_phi(burgers, v, vt, cc)
    assert phi == pytest.approx(0.111, rel=1e-10)
    xi = h.xi_hat(burgers, h.BVFunction.from_pcw(v), h.BVFunction.from_pcw(vt), cc)
    assert xi == pytest.approx(phi, rel=1e-12)


def test_front_tracking(burgers):
    cc = h.StabilityConstants()
    u0 = h.PiecewiseConstantFn(
        [0.0, 1.0, 2.0], [np.array([-0.1]), np.array([-0.3])], np.array([0.0])
    )
    traj = h.ft_solve(burgers, u0, 0.5, 7.0, cc)
    assert len(traj.events) == 1
    e = traj.events[0]
    assert e.t == pytest.approx(20.0 / 3.0, rel=1e-10)
    assert e.upsilon_after < e.upsilon_before
    snap = h.snapshot(traj, 0.0)
    assert h.l1_distance(snap, u0) < 1e-12


def test_phi_eps_compare(burgers):
    cc = h.StabilityConstants()
    a = h.ft_solve(burgers, box(-0.1), 0.05, 1.0, cc)
    b = h.ft_solve(burgers, box(-0.12), 0.05, 1.0, cc)
    cmp = h.phi_eps_compare(burgers, a, b, cc, 0.0)
    assert cmp["phi_eps"] == pytest.approx(cmp["phi"], rel=1e-9)
    assert cmp["l1"] == pytest.approx(0.02, rel=1e-10)


def test_calibration(burgers):
    cal = h.calibrate_constants(burgers, 0.1, 1, 200)
    assert cal.C0 >= 1.0
    assert cal.kappa2 >= 1.0
