"""Trace coordinates and fibers of the real-to-complex quotient comparison.

The conjugation quotient of SL(3,C) is coordinatized by (z, w) =
(tr M, tr M^-1); the real slices are z, w both real (split form) and
w = conj(z) (unitary forms).  For SU(2,1) the trace plane splits along the
zero set of the Goldman function into the elliptic region, its boundary
and the loxodromic exterior, and the fiber of the comparison map over a
trace is enumerated by choosing which eigenvalue is marked.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotSemisimple, NotUnimodular
from .involutions import FIRST, Involution
from .linalg import (
    DEFAULT_TOL,
    EIG_CLUSTER_FLOOR,
    OMEGA,
    Tol,
    det,
    fro,
    is_unimodular,
    mat3,
    second_invariant,
    solve_cubic,
    spectrum,
)
from .su21 import (
    CanonicalForm,
    elliptic_form,
    forms_equal,
    goldman_f,
    loxodromic_form,
    norm_angle,
)


@dataclass(frozen=True)
class TraceCoords:
    z: complex
    w: complex

    def __iter__(self):
        return iter((self.z, self.w))


class RealSlice(Enum):
    """Fixed locus of the induced involution on the trace plane."""

    PHI1 = "phi1"  # (z, w) -> (conj z, conj w); fixed: z, w real
    PHI2 = "phi2"  # (z, w) -> (conj w, conj z); fixed: w = conj z


def in_real_slice(coords: TraceCoords, which: RealSlice, tol: Tol = DEFAULT_TOL) -> bool:
    eps = max(tol.abs_eps, 1e-9) * max(1.0, abs(coords.z), abs(coords.w))
    if which is RealSlice.PHI1:
        return abs(coords.z.imag) <= eps and abs(coords.w.imag) <= eps
    return abs(coords.w - coords.z.conjugate()) <= eps


class Su21Region(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    CENTER = "center"
    EXTERIOR = "exterior"


class StabilizerKind(Enum):
    TORUS_A = "torus_a"  # regular, diagonalizable inside the real form
    TORUS_B = "torus_b"  # regular, not diagonalizable inside the real form
    GL2 = "gl2"
    FULL = "full"


#: traces of the three central elements of SU(2,1)
CENTER_TRACES = (3.0 + 0.0j, 3.0 * OMEGA, 3.0 * OMEGA**2)


def trace_coords(m, tol: Tol = DEFAULT_TOL) -> TraceCoords:
    """(tr m, tr m^-1); the inverse trace is read off the adjugate."""
    m = mat3(m)
    if not is_unimodular(m, tol):
        raise NotUnimodular(f"det = {det(m)}, expected 1")
    return TraceCoords(complex(np.trace(m)), complex(second_invariant(m)))


def power_trace(coords: TraceCoords, k: int) -> complex:
    """tr(M^k) from (z, w) by the Newton recurrence for X^3 - zX^2 + wX - 1.

    Negative powers use the coordinate swap (z, w) -> (w, z), since M^-1
    has characteristic polynomial X^3 - wX^2 + zX - 1.
    """
    z, w = complex(coords.z), complex(coords.w)
    k = int(k)
    if k < 0:
        z, w = w, z
        k = -k
    if k == 0:
        return 3.0 + 0.0j
    p1, p2, p3 = z, z * z - 2.0 * w, z**3 - 3.0 * z * w + 3.0
    if k == 1:
        return p1
    if k == 2:
        return p2
    if k == 3:
        return p3
    pm3, pm2, pm1 = p1, p2, p3
    for _ in range(4, k + 1):
        pm3, pm2, pm1 = pm2, pm1, z * pm1 - w * pm2 + pm3
    return pm1


def companion_lift(r: float, s: float) -> np.ndarray:
    """Real companion matrix with char poly X^3 - rX^2 + sX - 1 and det 1."""
    return np.array([[0, 0, 1], [1, 0, -s], [0, 1, r]], dtype=complex)


def diagonal_lift(coords: TraceCoords) -> np.ndarray:
    """Diagonal matrix of the roots of X^3 - zX^2 + wX - 1, in solver order."""
    roots = solve_cubic(-coords.z, coords.w, -1.0)
    return np.diag(roots)


def boundary_tol(z) -> float:
    """Width of the numerical zero set of the Goldman function (quartic growth)."""
    return 1e-6 * max(1.0, abs(complex(z)) ** 4)


def su21_region(z, tol: Tol = DEFAULT_TOL) -> Su21Region:
    """Position of a trace relative to the elliptic region and the centers."""
    z = complex(z)
    center_eps = max(tol.abs_eps, 1e-8) * max(1.0, abs(z))
    if min(abs(z - c) for c in CENTER_TRACES) <= center_eps:
        return Su21Region.CENTER
    f = goldman_f(z)
    btol = boundary_tol(z)
    if f < -btol:
        return Su21Region.INTERIOR
    if f <= btol:
        return Su21Region.BOUNDARY
    return Su21Region.EXTERIOR


_FIBER_COUNT = {
    Su21Region.INTERIOR: 3,
    Su21Region.BOUNDARY: 2,
    Su21Region.CENTER: 1,
    Su21Region.EXTERIOR: 1,
}


def fiber_count_su21(z, tol: Tol = DEFAULT_TOL) -> int:
    """Number of SU(2,1) conjugation classes over the trace z."""
    return _FIBER_COUNT[su21_region(z, tol)]


def fiber_count_sl3r(r: float, s: float) -> int:
    """Always 1: the split-form comparison map is a bijection."""
    return 1


def _character_roots(z: complex) -> np.ndarray:
    """Roots of X^3 - z X^2 + conj(z) X - 1 (the w = conj z slice)."""
    return solve_cubic(-z, z.conjugate(), -1.0)


def fiber_enumerate_su21(z, tol: Tol = DEFAULT_TOL) -> list[CanonicalForm]:
    """Canonical forms of the SU(2,1) classes lying over the trace z.

    Elliptic fibers are built by marking each distinct unit-modulus root of
    the character cubic in turn; on the boundary the double root is
    re-centered at the midpoint of the closest root pair and the simple
    root recovered as z - 2*double, which keeps every representative's
    trace within ~1e-8 of z.
    """
    z = complex(z)
    region = su21_region(z, tol)
    if region is Su21Region.EXTERIOR:
        roots = _character_roots(z)
        lam = roots[int(np.argmin(np.abs(roots)))]
        return [loxodromic_form(lam)]
    if region is Su21Region.CENTER:
        zeta = CENTER_TRACES[int(np.argmin([abs(z - c) for c in CENTER_TRACES]))] / 3.0
        ang = norm_angle(float(np.angle(zeta)))
        return [elliptic_form(ang, ang, ang)]
    if region is Su21Region.BOUNDARY:
        roots = _character_roots(z)
        pairs = [(0, 1), (0, 2), (1, 2)]
        i, j = min(pairs, key=lambda p: abs(roots[p[0]] - roots[p[1]]))
        double = (roots[i] + roots[j]) / 2.0
        double /= abs(double)
        simple = z - 2.0 * double
        simple /= abs(simple)
        ad, asweep = float(np.angle(double)), float(np.angle(simple))
        line = elliptic_form(ad, asweep, ad)  # marked angle doubled
        point = elliptic_form(ad, ad, asweep)  # marked angle simple
        return [line, point]
    # interior: three simple unit-modulus roots, one marking each
    roots = _character_roots(z)
    roots = roots / np.abs(roots)
    forms: list[CanonicalForm] = []
    for k in range(3):
        others = [roots[i] for i in range(3) if i != k]
        form = elliptic_form(
            float(np.angle(others[0])),
            float(np.angle(others[1])),
            float(np.angle(roots[k])),
        )
        if not any(forms_equal(form, f) for f in forms):
            forms.append(form)
    return forms


def su3_in_image(z, tol: Tol = DEFAULT_TOL) -> bool:
    """True iff the trace z is realized by an SU(3) element (f(z) <= 0)."""
    return goldman_f(z) <= boundary_tol(z)


def stabilizer_kind(m, t: Involution, tol: Tol = DEFAULT_TOL) -> StabilizerKind:
    """Type of the SL(3,C) stabilizer of a diagonalizable element.

    Scalars have the full group, one repeated eigenvalue gives a GL(2)
    block, and a regular element gives a torus whose type depends on the
    involution: for the first kind, type A means all eigenvalues real; for
    the second kind, type A means all of unit modulus (elliptic).
    """
    m = mat3(m)
    spec = spectrum(m, tol)
    if not spec.diagonalizable:
        raise NotSemisimple("stabilizer kinds are only defined for semisimple elements")
    if len(spec.eigenvalues) == 1:
        return StabilizerKind.FULL
    if len(spec.eigenvalues) == 2:
        return StabilizerKind.GL2
    eps = max(tol.abs_eps, EIG_CLUSTER_FLOOR) * max(1.0, fro(m))
    if t.kind == FIRST:
        type_a = all(abs(e.value.imag) <= eps for e in spec.eigenvalues)
    else:
        type_a = all(abs(abs(e.value) - 1.0) <= eps for e in spec.eigenvalues)
    return StabilizerKind.TORUS_A if type_a else StabilizerKind.TORUS_B
