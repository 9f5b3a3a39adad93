import math

import numpy as np
import pytest

from ineqmeans import ConvergenceError, ParameterError, quadrature
from ineqmeans.quadrature import (CubicHermite, composite_simpson, cumulative_simpson,
                                  simpson_nodes)


def test_constant():
    assert quadrature(lambda t: np.ones_like(t), 0.0, 1.0) == pytest.approx(1.0, rel=1e-14)


def test_linear():
    assert quadrature(lambda t: t, 0.0, 1.0) == pytest.approx(0.5, rel=1e-14)


def test_cubic_exact():
    assert quadrature(lambda t: t ** 3, 0.0, 1.0) == pytest.approx(0.25, rel=1e-12)


def test_smooth_transcendental():
    val = quadrature(np.exp, 0.0, 1.0, tol=1e-13)
    assert val == pytest.approx(math.e - 1.0, rel=1e-12)


def test_scalar_only_integrand_is_wrapped():
    def f(t):
        if hasattr(t, "__len__"):
            raise TypeError("scalar only")
        return t * t

    assert quadrature(f, 0.0, 1.0) == pytest.approx(1.0 / 3.0, rel=1e-12)


def test_kinked_integrand():
    val = quadrature(lambda t: np.abs(t - 1.0 / 3.0), 0.0, 1.0, tol=1e-12)
    exact = (1.0 / 3.0) ** 2 / 2 + (2.0 / 3.0) ** 2 / 2
    assert val == pytest.approx(exact, rel=1e-10)


def test_depth_cap_raises():
    # a jump at an irrational point can never satisfy the local target
    def f(t):
        return np.where(np.asarray(t) < 1.0 / math.pi, 0.0, 1.0)

    with pytest.raises(ConvergenceError):
        quadrature(f, 0.0, 1.0, tol=1e-15)


def test_bad_interval_rejected():
    with pytest.raises(ParameterError):
        quadrature(lambda t: t, 1.0, 0.0)


def test_deterministic():
    f = lambda t: np.sin(3.0 * t) ** 2 + 1.0
    a = quadrature(f, 0.0, 2.0, tol=1e-11)
    b = quadrature(f, 0.0, 2.0, tol=1e-11)
    assert a == b


def test_composite_and_cumulative_simpson_agree():
    xs, h = simpson_nodes(0.0, 2.0, 64)
    vals = np.exp(xs)
    total = composite_simpson(vals, h)
    cum = cumulative_simpson(vals, h)
    assert cum[-1] == pytest.approx(total, rel=1e-15)
    assert cum[0] == 0.0
    assert total == pytest.approx(math.e ** 2 - 1.0, rel=1e-9)


def test_cubic_hermite_reproduces_antiderivative():
    xs, h = simpson_nodes(0.0, 1.0, 128)
    vals = np.sin(xs)
    v = cumulative_simpson(vals, h)
    table = CubicHermite(0.0, 1.0 / 128, v, vals[::2])
    probe = np.linspace(0.0, 1.0, 501)
    exact = 1.0 - np.cos(probe)
    assert np.max(np.abs(table(probe) - exact)) < 1e-9
