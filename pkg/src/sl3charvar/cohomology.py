"""Galois 1-cocycles of element stabilizers and their classification.

For an involution t, a cocycle is a matrix c with c * t(c) = I.  The class
of a cocycle in the first cohomology set of a stabilizer is decided by an
explicit invariant depending on the stabilizer kind: a sign pair on the
diagonal torus, a 2x2 Hermitian signature on the GL(2) block, the
definite/indefinite dichotomy on the full group, and nothing at all in the
cases where the set is trivial.  The translate map phi sends a real
conjugate g x g^-1 of a base point x to the class of g^-1 t(g).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    KindMismatch,
    NotClosedOrbit,
    NotRealTranslate,
    UncoveredCombination,
)
from .involutions import FIRST, TAU2, Involution, RealFormType, identify_real_form
from .linalg import (
    DEFAULT_TOL,
    IDENTITY,
    Tol,
    fro,
    inverse,
    mat3,
    spectrum,
)
from .quotients import (
    StabilizerKind,
    Su21Region,
    fiber_enumerate_su21,
    stabilizer_kind,
    su21_region,
)
from .su21 import HermitianModel, angle_dist, convert_model, representative


@dataclass(frozen=True)
class H1Class:
    """Concrete invariant naming a first-cohomology class."""

    label: str

    def __str__(self):
        return self.label


TRIVIAL = H1Class("trivial")


def _sign_pair(s1: float, s2: float) -> H1Class:
    return H1Class("signs:" + ("+" if s1 > 0 else "-") + ("+" if s2 > 0 else "-"))


def _block_sig(p: int, n: int) -> H1Class:
    return H1Class(f"block:{p}+{n}-")


DEFINITE = H1Class("definite")
INDEFINITE = H1Class("indefinite")


@dataclass(frozen=True, eq=False)
class Cocycle:
    c: np.ndarray
    involution: Involution
    stabilizer: StabilizerKind

    def __post_init__(self):
        c = mat3(self.c)
        c.setflags(write=False)
        object.__setattr__(self, "c", c)
        if not is_cocycle(self.involution, c):
            raise ValueError("c * t(c) != identity: not a cocycle")


def is_cocycle(t: Involution, c, tol: Tol = DEFAULT_TOL) -> bool:
    """True iff c * t(c) = I at tolerance."""
    c = np.asarray(c, dtype=complex)
    scale = max(1.0, fro(c)) ** 2
    return fro(c @ t.apply(c, tol) - IDENTITY) <= max(tol.abs_eps, 1e-7) * scale


def phi_map(x, g, t: Involution, tol: Tol = DEFAULT_TOL) -> Cocycle:
    """Cocycle g^-1 t(g) attached to the real translate g x g^-1.

    The base point x must be semisimple and itself fixed by t (the cocycle
    lands in its stabilizer only then); the translate must be fixed by t.
    """
    x = mat3(x)
    g = mat3(g)
    if not spectrum(x, tol).diagonalizable:
        raise NotClosedOrbit("base point is not semisimple")
    if not t.is_fixed(x, tol):
        raise NotRealTranslate("base point is not fixed by the involution")
    ginv = inverse(g, tol)
    u = g @ x @ ginv
    if not t.is_fixed(u, tol):
        raise NotRealTranslate("g x g^-1 is not fixed by the involution")
    c = ginv @ t.apply(g, tol)
    return Cocycle(c, t, stabilizer_kind(x, t, tol))


def _shape_eps(c) -> float:
    return 1e-7 * max(1.0, fro(c))


def classify_cocycle(co: Cocycle, tol: Tol = DEFAULT_TOL) -> H1Class:
    """Invariant of the cocycle class, per stabilizer kind.

    The cocycle must be presented in the standard stabilizer coordinates
    (diagonal torus, upper-left GL(2) block); anything else raises
    KindMismatch.
    """
    c = co.c
    t = co.involution
    if t.kind == FIRST or co.stabilizer is StabilizerKind.TORUS_B:
        return TRIVIAL
    eps = _shape_eps(c)
    if co.stabilizer is StabilizerKind.TORUS_A:
        off = c - np.diag(np.diag(c))
        if fro(off) > eps:
            raise KindMismatch("torus cocycle is not diagonal")
        d = np.diag(c)
        if np.max(np.abs(d.imag)) > eps:
            raise KindMismatch("torus cocycle entries are not real")
        return _sign_pair(d[0].real, d[1].real)
    if co.stabilizer is StabilizerKind.GL2:
        if max(abs(c[0, 2]), abs(c[1, 2]), abs(c[2, 0]), abs(c[2, 1])) > eps:
            raise KindMismatch("cocycle is not block-diagonal for a GL2 stabilizer")
        block = (c @ t.matrix)[:2, :2]
        if fro(block - block.conj().T) > eps:
            raise KindMismatch("GL2 block of c*J is not Hermitian")
        vals = np.linalg.eigvalsh((block + block.conj().T) / 2.0)
        thr = 1e-7 * max(1.0, float(np.max(np.abs(vals))))
        p = int(np.sum(vals > thr))
        n = int(np.sum(vals < -thr))
        if p + n != 2:
            raise KindMismatch("degenerate Hermitian block")
        return _block_sig(p, n)
    if co.stabilizer is StabilizerKind.FULL:
        h = c @ t.matrix
        if fro(h - h.conj().T) > eps:
            raise KindMismatch("c*J is not Hermitian")
        vals = np.linalg.eigvalsh((h + h.conj().T) / 2.0)
        thr = 1e-7 * max(1.0, float(np.max(np.abs(vals))))
        p = int(np.sum(vals > thr))
        n = int(np.sum(vals < -thr))
        if p + n != 3:
            raise KindMismatch("degenerate Hermitian form c*J")
        return DEFINITE if (n == 0 or p == 0) else INDEFINITE
    raise KindMismatch(f"unsupported stabilizer kind {co.stabilizer}")


def _second_kind_type(t: Involution, tol: Tol) -> RealFormType:
    form = identify_real_form(t, tol)
    if form is RealFormType.SL3R:
        raise UncoveredCombination("second-kind involution of split type")
    return form


def h1_cardinality(kind: StabilizerKind, t: Involution, tol: Tol = DEFAULT_TOL) -> int:
    """Cardinality of the first cohomology set of the stabilizer.

    First-kind involutions give trivial sets for every stabilizer; for the
    unitary involutions the counts are 4 (regular torus of elliptic type),
    3 (GL2 block), 2 (full group), and 1 for the loxodromic-type torus,
    which only occurs for the signature-(2,1) form.
    """
    if t.kind == FIRST:
        return 1
    form = _second_kind_type(t, tol)
    if kind is StabilizerKind.TORUS_B:
        if form is RealFormType.SU21:
            return 1
        raise UncoveredCombination("no type-b torus is a stabilizer of an SU(3)-real class")
    return {StabilizerKind.TORUS_A: 4, StabilizerKind.GL2: 3, StabilizerKind.FULL: 2}[kind]


def _is_sign_diagonal(j) -> bool:
    d = np.diag(j)
    if fro(j - np.diag(d)) > 1e-12:
        return False
    return all(abs(x - 1.0) < 1e-12 or abs(x + 1.0) < 1e-12 for x in d)


def h1_enumerate(
    kind: StabilizerKind, t: Involution, tol: Tol = DEFAULT_TOL
) -> list[tuple[Cocycle, H1Class]]:
    """One explicit cocycle per cohomology class, with its classification.

    Covered combinations are those of the standard involutions (defining
    matrix diagonal with +-1 entries); everything else raises
    UncoveredCombination.
    """
    card = h1_cardinality(kind, t, tol)
    if t.kind == FIRST:
        reps = [IDENTITY]
    elif not _is_sign_diagonal(t.matrix):
        raise UncoveredCombination("enumeration requires a standard involution")
    elif kind is StabilizerKind.TORUS_A:
        reps = [
            np.diag([s1, s2, s1 * s2]).astype(complex)
            for s1 in (1.0, -1.0)
            for s2 in (1.0, -1.0)
        ]
    elif kind is StabilizerKind.TORUS_B:
        reps = [IDENTITY]
    elif kind is StabilizerKind.GL2:
        reps = [
            np.diag([1.0, 1.0, 1.0]).astype(complex),
            np.diag([1.0, -1.0, -1.0]).astype(complex),
            np.diag([-1.0, -1.0, 1.0]).astype(complex),
        ]
    else:  # FULL: identity plus a det-1 sign matrix in the other class
        j = np.diag(t.matrix).real
        if np.all(j > 0):  # compact type
            reps = [IDENTITY, np.diag([1.0, -1.0, -1.0]).astype(complex)]
        else:
            reps = [IDENTITY, np.diag([-1.0, -1.0, 1.0]).astype(complex)]
    out = []
    for r in reps:
        co = Cocycle(r, t, kind)
        out.append((co, classify_cocycle(co, tol)))
    labels = [cl.label for _, cl in out]
    if len(set(labels)) != card:
        raise UncoveredCombination(
            f"expected {card} distinct classes, found {sorted(set(labels))}"
        )
    return out


def fiber_h1_kernel_bound(x, t: Involution, tol: Tol = DEFAULT_TOL) -> int:
    """Upper bound for the comparison-map fiber through the class of x.

    This is the cardinality of H^1 of the stabilizer of x; it is attained
    exactly when H^1 of the ambient group is trivial (first kind), and is
    an upper bound otherwise.
    """
    return h1_cardinality(stabilizer_kind(x, t, tol), t, tol)


def _match_permutation(xdiag, udiag) -> np.ndarray:
    """Permutation-like g with det 1 and g diag(x) g^-1 = diag(u)."""
    p = np.zeros((3, 3), dtype=complex)
    used = [False] * 3
    for j in range(3):
        best, best_i = None, -1
        for i in range(3):
            if used[i]:
                continue
            d = abs(udiag[j] - xdiag[i])
            if best is None or d < best:
                best, best_i = d, i
        used[best_i] = True
        p[j, best_i] = 1.0
    if np.linalg.det(p).real < 0:
        p = np.diag([-1.0, 1.0, 1.0]) @ p
    return p


def fiber_classes_su21(z, tol: Tol = DEFAULT_TOL):
    """Fiber of the comparison map over z with the cocycle class of each lift.

    Returns a list of (canonical form, cocycle, class) triples built from a
    fixed real base point over z.  The classes are pairwise distinct (the
    translate map is injective), and their number is bounded by the H^1
    cardinality of the base stabilizer.
    """
    z = complex(z)
    region = su21_region(z, tol)
    forms = fiber_enumerate_su21(z, tol)
    out = []
    if region is Su21Region.EXTERIOR:
        lam_rep, model = representative(forms[0])
        x = convert_model(lam_rep, model, HermitianModel.H1)
        co = phi_map(x, IDENTITY, TAU2, tol)
        return [(forms[0], co, classify_cocycle(co, tol))]
    if region is Su21Region.CENTER:
        x, _ = representative(forms[0])
        co = phi_map(x, IDENTITY, TAU2, tol)
        return [(forms[0], co, classify_cocycle(co, tol))]
    if region is Su21Region.BOUNDARY:
        # base point in GL2-block shape: repeated eigenvalue in slots 1, 2
        point = next((f for f in forms if _close_angles(f.a, f.b)), forms[-1])
        x, _ = representative(point)  # diag(d, d, s)
    else:
        x, _ = representative(forms[0])
    xdiag = np.diag(x)
    for form in forms:
        u, _ = representative(form)
        g = _match_permutation(xdiag, np.diag(u))
        co = phi_map(x, g, TAU2, tol)
        out.append((form, co, classify_cocycle(co, tol)))
    return out


def _close_angles(a: float, b: float, atol: float = 1e-9) -> bool:
    return angle_dist(a, b) <= atol
