import math

import numpy as np
import pytest

import mlbiv


def test_exponential_reduction():
    r = mlbiv.bivariate(1.0, 1.0)
    assert r.converged
    assert abs(r.value - math.exp(2.0)) < 1e-12
    assert mlbiv.bivariate(0.0, 0.0, alpha=0.9).value == 1.0


def test_univariate_and_contour():
    kw = dict(alpha=0.7, beta=1.3, omega1=0.5, omega2=-0.5)
    series = mlbiv.univariate(1.0, **kw).value
    contour = mlbiv.univariate_contour(1.0, **kw).value
    assert abs(series - contour) < 1e-9
    assert mlbiv.univariate(0.0).value == 1.0


def test_prabhakar_matches_bivariate_with_y_zero():
    a, g, d, x = 0.8, 1.2, 1.5, 0.3 - 0.2j
    lhs = mlbiv.bivariate(x, 0.0, alpha=a, beta=1.7, gamma=g, delta=d).value
    assert abs(lhs - mlbiv.prabhakar(x, alpha=a, gamma=g, delta=d).value) < 1e-13


def test_laplace():
    kw = dict(alpha=0.8, beta=0.6, omega1=0.4, omega2=0.3)
    closed = mlbiv.laplace(3.0, **kw)
    numeric = mlbiv.laplace_numeric(3.0, horizon=60.0, steps=120, **kw).value
    assert abs(numeric - closed) < 1e-6 * abs(closed)


def test_operators_round_trip():
    t = np.linspace(0.0, 1.0, 1025)
    f = np.sin(t).astype(complex)
    kw = dict(alpha=0.8, beta=1.1, gamma=0.4, delta=1.3, omega1=0.7, omega2=-0.6)
    j = mlbiv.integral(f, 0.0, 1.0, **kw)
    back = mlbiv.derivative(j, 0.0, 1.0, **kw)
    assert j.shape == f.shape
    assert np.max(np.abs(back[t >= 0.1] - f[t >= 0.1])) < 1e-5

    one = np.ones(257, dtype=complex)
    half = mlbiv.integral(one, 0.0, 1.0, gamma=0.5, delta=0.0)
    x = np.linspace(0.0, 1.0, 257)
    assert np.max(np.abs(half - np.sqrt(x) / math.gamma(1.5))) < 1e-12
    assert np.max(np.abs(mlbiv.caputo(one, 0.0, 1.0, gamma=0.6, omega1=0.3))) < 1e-12


def test_bound_and_fde():
    a = mlbiv.bound_constant(0.0, 2.0, alpha=0.7, beta=1.2, gamma=1.6, delta=0.0)
    assert a == pytest.approx(2.0**1.6 / (1.6 * math.gamma(1.6)), rel=1e-13)
    res = mlbiv.rl_fde_residual([0.25, 1.0], 0.6, 0.7, 1.0, 0.5, -0.3)
    assert max(res) < 1e-9
    assert max(mlbiv.caputo_fde_residual([0.5, 1.0], 0.3, 0.4, 1.0, 1.0)) < 1e-9


def test_errors():
    with pytest.raises(mlbiv.DomainError):
        mlbiv.bivariate(1.0, 1.0, alpha=-1.0)
    with pytest.raises(ValueError):
        mlbiv.integral(np.ones(4, dtype=complex), 0.0, 1.0)
    with pytest.raises(mlbiv.ConvergenceError):
        mlbiv.bivariate(30.0, 30.0, alpha=0.3, beta=0.3, max_shell=20)


def test_presets_and_verify():
    p = mlbiv.presets()
    assert p["fig1d"]["alpha"] == 1.5
    assert p["fig2a"]["univariate"]
    report = mlbiv.verify("exponential,figures")
    assert [r["suite"] for r in report] == ["exponential", "figures"]
    assert all(r["pass"] for r in report)
    assert "semigroup" in mlbiv.suite_names()
