"""Antiholomorphic involutions of SL(3,C) and the real forms they cut out.

An involution is stored by its defining matrix: first kind acts by
M -> A conj(M) A^-1, second kind by M -> J t(conj(M))^-1 J^-1.  The three
standard involutions TAU0, TAU1, TAU2 fix SL(3,R), SU(3) and SU(2,1)
respectively.  Twisting by a group element h with h * tau(h) central
produces the involutions appearing in the lifting construction; the type
of the resulting real form is read off the signature of the trace form on
its fixed Lie algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DegenerateSolve, NotCentral, UnknownSignature
from .linalg import (
    DEFAULT_TOL,
    IDENTITY,
    OMEGA,
    Tol,
    central_scalar,
    det,
    fro,
    inverse,
    mat3,
    mat3_from_json,
    mat3_to_json,
)

FIRST = "first"
SECOND = "second"

I21 = np.diag([1.0, 1.0, -1.0]).astype(complex)


class RealFormType(Enum):
    SL3R = "SL3R"
    SU3 = "SU3"
    SU21 = "SU21"


@dataclass(frozen=True, eq=False)
class Involution:
    """An antiholomorphic involution of SL(3,C).

    kind "first":  M -> A conj(M) A^-1
    kind "second": M -> J t(conj(M))^-1 J^-1

    The defining matrix is normalized to |det| = 1 (a scalar rescaling does
    not change the map) and must satisfy A conj(A) scalar, resp.
    J t(conj(J))^-1 scalar, so that the map squares to the identity.
    """

    kind: str
    matrix: np.ndarray
    _inv: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        if self.kind not in (FIRST, SECOND):
            raise ValueError(f"unknown involution kind {self.kind!r}")
        m = mat3(self.matrix)
        d = det(m)
        if abs(d) < 1e-12:
            raise ValueError("defining matrix must be invertible")
        m = m / abs(d) ** (1.0 / 3.0)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        inv = inverse(m)
        inv.setflags(write=False)
        object.__setattr__(self, "_inv", inv)
        if self.kind == FIRST:
            square = m @ m.conj()
        else:
            square = m @ inverse(m.conj().T)
        zeta = complex(np.trace(square)) / 3.0
        if fro(square - zeta * IDENTITY) > 1e-8 * max(1.0, fro(square)) or abs(abs(zeta) - 1.0) > 1e-8:
            raise ValueError("defining matrix does not give an involution")

    def apply(self, m, tol: Tol = DEFAULT_TOL) -> np.ndarray:
        """Image of m under the involution."""
        if self.kind == FIRST:
            return self.matrix @ m.conj() @ self._inv
        return self.matrix @ inverse(m.conj().T, tol) @ self._inv

    __call__ = apply

    def is_fixed(self, m, tol: Tol = DEFAULT_TOL) -> bool:
        """True iff m lies in the real form defined by this involution."""
        return fro(self.apply(m, tol) - m) <= max(tol.abs_eps, 1e-9) * max(1.0, fro(m))

    def differential(self, x) -> np.ndarray:
        """Action on the Lie algebra sl(3,C)."""
        if self.kind == FIRST:
            return self.matrix @ x.conj() @ self._inv
        return -self.matrix @ x.conj().T @ self._inv


TAU0 = Involution(FIRST, IDENTITY)
TAU1 = Involution(SECOND, IDENTITY)
TAU2 = Involution(SECOND, I21)

_NAMED = {"tau0": TAU0, "tau1": TAU1, "tau2": TAU2}

#: the center of SL(3,C): scalar cube roots of unity
CENTER = tuple(np.diag([OMEGA**k] * 3) for k in range(3))


def twist(t: Involution, h, tol: Tol = DEFAULT_TOL) -> Involution:
    """The involution g -> h t(g) h^-1.

    Requires |det h| = 1 and h * t(h) central (a scalar cube root of 1
    times the identity); the standard SU(2,1) involution arises this way as
    the twist of TAU1 by diag(1, 1, -1).
    """
    h = mat3(h)
    if abs(abs(det(h)) - 1.0) > max(tol.abs_eps, 1e-8) * max(1.0, fro(h)) ** 3:
        raise NotCentral("twisting element must have unit-modulus determinant")
    witness = h @ t.apply(h, tol)
    if central_scalar(witness, tol) is None:
        raise NotCentral("h * t(h) is not a central element of SL(3,C)")
    return Involution(t.kind, h @ t.matrix)


def conjugate_involution(t: Involution, k) -> Involution:
    """The involution m -> k t(k^-1 m k) k^-1 fixing the form k G k^-1.

    Always involutive, for any invertible k; the fixed real form is the
    conjugate of t's, so the identified type is unchanged.
    """
    k = mat3(k)
    if t.kind == FIRST:
        return Involution(FIRST, k @ t.matrix @ inverse(k.conj()))
    return Involution(SECOND, k @ t.matrix @ k.conj().T)


# Basis of traceless 3x3 complex matrices used by fixed_lie_algebra; the
# coordinates of a traceless X are its six off-diagonal entries plus
# (X[0,0], X[1,1]).
def _basis_matrix(k: int) -> np.ndarray:
    b = np.zeros((3, 3), dtype=complex)
    positions = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    if k < 6:
        b[positions[k]] = 1.0
    elif k == 6:
        b[0, 0] = 1.0
        b[2, 2] = -1.0
    else:
        b[1, 1] = 1.0
        b[2, 2] = -1.0
    return b


def _coords(x) -> np.ndarray:
    return np.array(
        [x[0, 1], x[0, 2], x[1, 0], x[1, 2], x[2, 0], x[2, 1], x[0, 0], x[1, 1]],
        dtype=complex,
    )


def _from_coords(c) -> np.ndarray:
    x = np.zeros((3, 3), dtype=complex)
    x[0, 1], x[0, 2], x[1, 0], x[1, 2], x[2, 0], x[2, 1] = c[:6]
    x[0, 0], x[1, 1] = c[6], c[7]
    x[2, 2] = -c[6] - c[7]
    return x


def fixed_lie_algebra(t: Involution, tol: Tol = DEFAULT_TOL) -> list[np.ndarray]:
    """A real basis of the fixed algebra {X traceless : dt(X) = X}.

    The fixed-point equation is real-linear over the 16 real parameters of
    a traceless complex matrix; the solution space is computed by SVD and
    must have real dimension 8 (the real form of sl(3,C)).
    """
    # real-linear map F(v) = coords(dtheta(matrix(v))) on R^16
    f = np.zeros((16, 16))
    for r in range(16):
        k, imag = divmod(r, 2)
        x = _basis_matrix(k) * (1j if imag else 1.0)
        y = _coords(t.differential(x))
        col = np.empty(16)
        col[0::2] = y.real
        col[1::2] = y.imag
        f[:, r] = col
    _, s, vh = np.linalg.svd(f - np.eye(16))
    null_mask = s <= max(tol.abs_eps, 1e-9) * max(1.0, s[0])
    dim = int(np.sum(null_mask))
    if dim != 8:
        raise DegenerateSolve(f"fixed space has dimension {dim}, expected 8")
    basis = []
    for v in vh[null_mask]:
        basis.append(_from_coords(v[0::2] + 1j * v[1::2]))
    return basis


_SIGNATURE_TABLE = {
    (5, 3): RealFormType.SL3R,
    (0, 8): RealFormType.SU3,
    (4, 4): RealFormType.SU21,
}


def identify_real_form(t: Involution, tol: Tol = DEFAULT_TOL) -> RealFormType:
    """Type of the real form fixed by t, via the trace form tr(XY).

    tr(XY) is a positive multiple of the Killing form of sl(3), so its
    signature on the fixed algebra separates the three real forms:
    (5,3) split, (0,8) compact, (4,4) the Hermitian form of signature (2,1).
    """
    basis = fixed_lie_algebra(t, tol)
    n = len(basis)
    gram = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            v = complex(np.trace(basis[i] @ basis[j]))
            if abs(v.imag) > 1e-7 * max(1.0, abs(v)):
                raise UnknownSignature("trace form is not real on the fixed algebra")
            gram[i, j] = gram[j, i] = v.real
    vals = np.linalg.eigvalsh(gram)
    thr = 1e-7 * max(1.0, float(np.max(np.abs(vals))))
    p = int(np.sum(vals > thr))
    q = int(np.sum(vals < -thr))
    if p + q != n:
        raise UnknownSignature("trace form is degenerate on the fixed algebra")
    try:
        return _SIGNATURE_TABLE[(p, q)]
    except KeyError:
        raise UnknownSignature(f"signature ({p},{q}) matches no real form of SL(3,C)")


def involution_to_json(t: Involution) -> dict:
    return {"kind": t.kind, "matrix": mat3_to_json(t.matrix)}


def involution_from_json(obj) -> Involution:
    """Decode an involution; the names tau0/tau1/tau2 are accepted too."""
    if isinstance(obj, str):
        try:
            return _NAMED[obj]
        except KeyError:
            raise ValueError(f"unknown involution name {obj!r}")
    if not isinstance(obj, dict) or "kind" not in obj or "matrix" not in obj:
        raise ValueError("involution JSON needs 'kind' and 'matrix' fields")
    return Involution(obj["kind"], mat3_from_json(obj["matrix"]))
