"""Kernel backend selection and numpy/numba agreement."""

import cmath
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from lerchkit import _kernels_numpy as knp
from lerchkit import backend

try:
    from lerchkit import _kernels_numba as knb

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    knb = None
    HAVE_NUMBA = False

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")


def rel(a, b):
    return abs(a - b) / max(1.0, abs(a), abs(b))


class TestBackendSelection:
    def test_backend_is_declared(self):
        assert backend.BACKEND in {"numba", "numpy"}

    def test_exports_exist(self):
        for name in (
            "sum_inv_pow",
            "sum_alt_inv_pow",
            "lerch_sum",
            "lerch_partial_sums",
            "eta_integrand",
            "segment_integrand",
        ):
            assert callable(getattr(backend, name))

    def test_env_forces_numpy(self):
        out = subprocess.run(
            [sys.executable, "-c", "from lerchkit.backend import BACKEND; print(BACKEND)"],
            env={**os.environ, "LERCHKIT_BACKEND": "numpy"},
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0
        assert out.stdout.strip() == "numpy"

    def test_invalid_env_value_rejected(self):
        out = subprocess.run(
            [sys.executable, "-c", "import lerchkit.backend"],
            env={**os.environ, "LERCHKIT_BACKEND": "fortran"},
            capture_output=True,
            text=True,
        )
        assert out.returncode != 0
        assert "LERCHKIT_BACKEND" in out.stderr

    def test_full_run_under_numpy_backend(self):
        out = subprocess.run(
            [
                sys.executable,
                "-m",
                "lerchkit.cli",
                "verify",
                "--filter",
                "series_*",
            ],
            env={**os.environ, "LERCHKIT_BACKEND": "numpy"},
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0, out.stdout + out.stderr
        assert "0 failed" in out.stdout


@needs_numba
class TestKernelAgreement:
    def test_sum_inv_pow(self):
        a = knp.sum_inv_pow(0.25, 3, 0, 200_000)
        b = knb.sum_inv_pow(0.25, 3, 0, 200_000)
        assert rel(a, b) < 1e-14

    def test_sum_alt_inv_pow(self):
        a = knp.sum_alt_inv_pow(0.5, 2, 0, 200_001)
        b = knb.sum_alt_inv_pow(0.5, 2, 0, 200_001)
        assert rel(a, b) < 1e-14

    def test_lerch_sum(self):
        a_val = cmath.exp(1j * 1.1)
        x = knp.lerch_sum(a_val, 0.75, 4, 0, 100_000, 1.0 + 0j)
        y = knb.lerch_sum(a_val, 0.75, 4, 0, 100_000, 1.0 + 0j)
        assert rel(x, y) < 1e-13

    def test_lerch_sum_interior(self):
        x = knp.lerch_sum(0.5 + 0.2j, 1.0, 2, 0, 5_000, 1.0 + 0j)
        y = knb.lerch_sum(0.5 + 0.2j, 1.0, 2, 0, 5_000, 1.0 + 0j)
        assert rel(x, y) < 1e-14

    def test_lerch_partial_sums(self):
        a_val = cmath.exp(1j * 0.7)
        x = knp.lerch_partial_sums(a_val, 0.5, 3, 4_096, 0, 1.0 + 0j, 0j)
        y = knb.lerch_partial_sums(a_val, 0.5, 3, 4_096, 0, 1.0 + 0j, 0j)
        assert np.max(np.abs(x - y)) < 1e-13

    def test_eta_integrand(self):
        t = np.linspace(0.01, 40.0, 2_000)
        x = knp.eta_integrand(t, -1.0 + 0j, 0.5, 3)
        y = knb.eta_integrand(t, -1.0 + 0j, 0.5, 3)
        assert np.max(np.abs(x - y)) < 1e-14 * np.max(np.abs(x))

    def test_segment_integrand(self):
        u = np.linspace(0.0, 1.0, 1_001)
        for kind in (0, 1):
            x = knp.segment_integrand(u, math.pi / 2, 0.5, 2, kind)
            y = knb.segment_integrand(u, math.pi / 2, 0.5, 2, kind)
            assert np.max(np.abs(np.asarray(x) - np.asarray(y))) < 1e-13


@needs_numba
class TestKernelAccuracy:
    def test_sum_inv_pow_matches_closed_form(self):
        # zeta(2) partial sum + integral tail bound sanity
        total = knb.sum_inv_pow(1.0, 2, 0, 1_000_000)
        assert abs(total - (math.pi**2 / 6.0 - 1e-6)) < 2e-9

    def test_alternating_matches_eta(self):
        total = knb.sum_alt_inv_pow(1.0, 2, 0, 1_000_000)
        assert abs(total - math.pi**2 / 12.0) < 1e-12
