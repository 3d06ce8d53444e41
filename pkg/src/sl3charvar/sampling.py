"""Seeded random generators of group elements and representations.

Used by the test suite and the CLI selftest; everything takes an explicit
numpy Generator so runs are reproducible.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from .linalg import mat3
from .su21 import HermitianModel

_COND_MAX = 100.0


def _ginibre(rng) -> np.ndarray:
    return (rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))) / np.sqrt(2.0)


def random_sl3c(rng) -> np.ndarray:
    """Random SL(3,C) element with moderate condition number."""
    while True:
        m = _ginibre(rng)
        d = np.linalg.det(m)
        if abs(d) > 0.1 and np.linalg.cond(m) < _COND_MAX:
            return mat3(m / d ** (1.0 / 3.0))


def random_su3(rng) -> np.ndarray:
    """Haar-ish random SU(3) element via QR of a Ginibre matrix."""
    q, r = np.linalg.qr(_ginibre(rng))
    d = np.diag(r)
    q = q @ np.diag(d / np.abs(d))
    return mat3(q / np.linalg.det(q) ** (1.0 / 3.0))


def random_sl3r(rng) -> np.ndarray:
    """Random SL(3,R) element with moderate condition number."""
    while True:
        m = rng.standard_normal((3, 3))
        d = np.linalg.det(m)
        if abs(d) > 0.1 and np.linalg.cond(m) < _COND_MAX:
            if d < 0:
                m[[0, 1]] = m[[1, 0]]
                d = -d
            return mat3(m / d ** (1.0 / 3.0))


def random_su21(rng, model: HermitianModel = HermitianModel.H1) -> np.ndarray:
    """Random SU(2,1) element: exponential of a random algebra element.

    The algebra of the form H consists of the traceless X = H A with A
    anti-Hermitian, after removing the (purely imaginary) trace.
    """
    g = _ginibre(rng)
    a = (g - g.conj().T) / 2.0
    x = model.matrix @ a
    x = x - (np.trace(x) / 3.0) * np.eye(3)
    return mat3(expm(x))


_SAMPLERS = {
    "sl3r": random_sl3r,
    "su3": random_su3,
    "su21": random_su21,
}


def random_form_element(form: str, rng) -> np.ndarray:
    try:
        return _SAMPLERS[form](rng)
    except KeyError:
        raise ValueError(f"unknown real form {form!r}")


def random_representation(form: str, rng, n_generators: int = 2) -> list[np.ndarray]:
    """Generator images drawn from the given real form (H1 model for su21)."""
    return [random_form_element(form, rng) for _ in range(n_generators)]
