"""Smoke tests for the python bindings."""

import math

import sswm


def test_background():
    assert abs(sswm.theta(0.5) - 0.8) < 1e-15
    assert abs(sswm.cos2f0(0.3) - math.cos(4 * math.atan(0.3))) < 1e-14


def test_gauge_mode_is_an_eigenvalue():
    r = sswm.miss(1.0)
    assert abs(r.miss) < 1e-12
    assert r.cls == sswm.MissClass.eigenvalue_candidate
    u, up = sswm.phi0_at(1.0, 0.5)
    assert abs(u - sswm.theta(0.5)) < 1e-12


def test_scan_and_beta():
    rep = sswm.scan_real(0.9, 1.1, 21)
    assert len(rep.roots) == 1
    assert abs(rep.roots[0].lam - 1.0) < 1e-6
    assert sswm.beta_sign_changes(0.5) == 1
    assert 0.4 < sswm.beta_root(0.5) < 0.5


def test_picard():
    c = sswm.contraction_radius_zero(0.5)
    assert c.contractive and c.lipschitz < 0.9
    run = sswm.picard_phi0(0.5, c.endpoint)
    assert run.converged and run.residual < 1e-9


def test_errors_are_python_exceptions():
    try:
        sswm.beta_root(1.5)
    except (RuntimeError, ValueError):
        pass
    else:
        raise AssertionError("expected an exception")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"ok {name}")
    print("python smoke tests passed")
