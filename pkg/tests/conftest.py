"""Shared test helpers: independent oracles and random-witness builders.

The oracles here deliberately take different routes from the library code
they check (numpy eig/SVD where the library uses closed forms and pivoted
elimination, Krylov bases for real conjugacy, eigenvector search for
reducibility).
"""

import numpy as np

from sl3charvar import linalg as la
from sl3charvar.involutions import Involution
from sl3charvar.quotients import StabilizerKind


def conjugate(m, g):
    return g @ m @ la.inverse(g)


def random_det1_diag(rng):
    """Random diagonal SL(3,C) element."""
    u = np.exp(rng.standard_normal() + 1j * rng.uniform(0, 2 * np.pi))
    v = np.exp(rng.standard_normal() + 1j * rng.uniform(0, 2 * np.pi))
    return np.diag([u, v, 1.0 / (u * v)])


def random_gl2_block(rng):
    """Random element of the GL2-block stabilizer, det 1."""
    m2 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    while abs(np.linalg.det(m2)) < 0.1:
        m2 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    out = np.zeros((3, 3), dtype=complex)
    out[:2, :2] = m2
    out[2, 2] = 1.0 / np.linalg.det(m2)
    return out


def stabilizer_sample(kind, rng):
    """Random element of the standard stabilizer of the given kind."""
    from sl3charvar.sampling import random_sl3c

    if kind in (StabilizerKind.TORUS_A, StabilizerKind.TORUS_B):
        return random_det1_diag(rng)
    if kind is StabilizerKind.GL2:
        return random_gl2_block(rng)
    return random_sl3c(rng)


def coboundary_twist(c, h, t: Involution):
    """The equivalent cocycle h^-1 c t(h)."""
    return la.inverse(h) @ c @ t.apply(h)


def krylov_conjugator(m1, m2, rng, tries=20):
    """Real h with m1 h = h m2, built from Krylov bases of a shared companion.

    Works for any pair of real cyclic (nonderogatory) matrices with the
    same characteristic polynomial; returns None if no well-conditioned
    cyclic vector is found.
    """
    for _ in range(tries):
        v1 = rng.standard_normal(3)
        v2 = rng.standard_normal(3)
        k1 = np.column_stack([v1, m1.real @ v1, m1.real @ m1.real @ v1])
        k2 = np.column_stack([v2, m2.real @ v2, m2.real @ m2.real @ v2])
        if abs(np.linalg.det(k1)) > 1e-6 and abs(np.linalg.det(k2)) > 1e-6:
            return k1 @ np.linalg.inv(k2)
    return None


def has_common_eigenvector(a, b, atol=1e-8):
    """Brute-force reducibility probe: some eigenline of a is b-invariant."""
    _, vecs = np.linalg.eig(a)
    for i in range(3):
        v = vecs[:, i]
        w = b @ v
        # w parallel to v iff the 2x2 minors of [v w] vanish
        cross = np.array(
            [
                v[0] * w[1] - v[1] * w[0],
                v[0] * w[2] - v[2] * w[0],
                v[1] * w[2] - v[2] * w[1],
            ]
        )
        if np.linalg.norm(cross) <= atol * max(1.0, np.linalg.norm(w)):
            return True
    return False


def is_reducible_pair(a, b):
    """A pair is reducible iff it has a common invariant line or plane."""
    return has_common_eigenvector(a, b) or has_common_eigenvector(a.T, b.T)


def unitary_conjugator(u, v, atol=1e-8):
    """Unitary h with u h = h v for unitary u, v with the same spectrum.

    Matches eigenvalues by angle and pairs the (orthonormal) eigenbases.
    Only reliable for simple spectra.
    """
    wu, pu = np.linalg.eig(u)
    wv, pv = np.linalg.eig(v)
    order_u = np.argsort(np.angle(wu))
    order_v = np.argsort(np.angle(wv))
    if np.max(np.abs(np.sort_complex(wu) - np.sort_complex(wv))) > 1e-6:
        return None
    pu = pu[:, order_u]
    pv = pv[:, order_v]
    # eigenvectors of a unitary matrix with simple spectrum are orthogonal
    pu /= np.linalg.norm(pu, axis=0)
    pv /= np.linalg.norm(pv, axis=0)
    h = pu @ pv.conj().T
    if np.linalg.norm(u @ h - h @ v) > atol * 10:
        return None
    return h / np.linalg.det(h) ** (1.0 / 3.0)


def eig_match_conjugator(x, u):
    """g with g x g^-1 = u for diagonalizable x, u sharing a simple spectrum."""
    wx, px = np.linalg.eig(x)
    wu, pu = np.linalg.eig(u)
    used = [False] * 3
    perm = []
    for i in range(3):
        choices = [j for j in range(3) if not used[j]]
        j = min(choices, key=lambda j: abs(wu[j] - wx[i]))
        used[j] = True
        perm.append(j)
    g = pu[:, perm] @ np.linalg.inv(px)
    return g / np.linalg.det(g) ** (1.0 / 3.0)
