"""Adaptive Gauss-Kronrod integration.

Integrands receive a numpy array of nodes and must evaluate elementwise,
matching how the integral-representation module drives the integrator.
"""

import math

import numpy as np
import pytest

from lerchkit.errors import NonConvergence
from lerchkit.quadrature import geometric_breakpoints, integrate


class TestKnownIntegrals:
    def test_polynomial_is_exact(self):
        res = integrate(lambda x: x * x, [0.0, 1.0], abs_tol=1e-14)
        assert abs(res.value - 1.0 / 3.0) < 1e-15
        assert res.error_estimate < 1e-14

    def test_multiple_breakpoints(self):
        res = integrate(np.sin, [0.0, 1.0, 2.0, math.pi], abs_tol=1e-13)
        assert abs(res.value - 2.0) < 1e-13

    def test_complex_integrand(self):
        res = integrate(lambda t: np.exp(1j * t), [0.0, math.pi / 2], abs_tol=1e-13)
        assert abs(res.value - complex(1.0, 1.0)) < 1e-13

    def test_decaying_exponential_on_geometric_grid(self):
        # integral_0^60 t e^{-t} dt = 1 - 61 e^{-60}
        bps = geometric_breakpoints(60.0)
        res = integrate(lambda t: t * np.exp(-t), bps, abs_tol=1e-13)
        assert abs(res.value - (1.0 - 61.0 * math.exp(-60.0))) < 5e-13

    def test_error_estimate_covers_truth(self):
        res = integrate(np.exp, [0.0, 2.0], abs_tol=1e-12)
        truth = math.exp(2.0) - 1.0
        assert abs(res.value - truth) <= max(res.error_estimate, 1e-14)


class TestAdaptivity:
    def test_refines_peaked_integrand(self):
        # Narrow Gaussian: a single 7/15 panel cannot resolve it.
        c, w = 0.3, 0.004
        res = integrate(
            lambda x: np.exp(-(((x - c) / w) ** 2)), [0.0, 1.0], abs_tol=1e-12
        )
        truth = w * math.sqrt(math.pi)  # erf terms are 1 to >1e-16 here
        assert abs(res.value - truth) < 1e-12
        assert res.intervals > 8

    def test_interval_budget_raises(self):
        with pytest.raises(NonConvergence):
            integrate(
                lambda x: np.sqrt(np.abs(x - 1.0 / math.pi)),
                [0.0, 1.0],
                abs_tol=1e-15,
                max_intervals=8,
            )

    def test_nonconvergence_carries_partial_result(self):
        try:
            integrate(
                lambda x: np.sqrt(np.abs(x - 1.0 / math.pi)),
                [0.0, 1.0],
                abs_tol=1e-15,
                max_intervals=8,
            )
        except NonConvergence as exc:
            # integral_0^1 sqrt|x - 1/pi| dx, computable in closed form
            c = 1.0 / math.pi
            truth = (c ** 1.5 + (1 - c) ** 1.5) * 2.0 / 3.0
            assert abs(exc.value - truth) < 1e-3
            assert exc.error_estimate > 1e-15


class TestGeometricBreakpoints:
    def test_structure(self):
        bps = geometric_breakpoints(64.0)
        assert bps[0] == 0.0
        assert bps[-1] == 64.0
        assert bps[1] == 0.5
        # strictly increasing
        for x, y in zip(bps, bps[1:]):
            assert y > x

    def test_custom_first_step(self):
        bps = geometric_breakpoints(10.0, first=0.25)
        assert bps[1] == 0.25
        assert bps[-1] == 10.0
