"""Lifting real characters of free groups into real forms of SL(3,C).

A representation is good exactly when it is irreducible (for SL(3)); its
character is real for an involution t exactly when a nonzero intertwiner h
with rho_i h = h t(rho_i) exists.  For good representations the
intertwiner is unique up to scalar, h * t(h) is forced to be central, and
twisting t by h produces an involution fixing the representation; the type
of the resulting real form is identified by its Killing-signature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoIntertwiner, NotCentral, NotGood, NotUnique
from .involutions import (
    Involution,
    RealFormType,
    identify_real_form,
    involution_from_json,
    involution_to_json,
    twist,
)
from .linalg import (
    DEFAULT_TOL,
    IDENTITY,
    OMEGA,
    Tol,
    central_scalar,
    commutant_dim,
    det,
    fro,
    is_unimodular,
    mat3,
    mat3_from_json,
    mat3_to_json,
    spectrum,
)

#: span closure must stabilize within 9 steps in dimension 9; the cap is a
#: safety margin against cycling on degenerate input
MAX_SPAN_ROUNDS = 20


@dataclass(frozen=True, eq=False)
class Representation:
    """Images of free-group generators (length 1 for the group Z)."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(mat3(g) for g in self.generators)
        if not gens:
            raise ValueError("a representation needs at least one generator")
        for g in gens:
            if not is_unimodular(g, DEFAULT_TOL):
                raise ValueError("generators must have determinant 1")
            g.setflags(write=False)
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GoodnessReport:
    irreducible: bool
    commutant_dimension: int
    semisimple: bool
    good: bool


@dataclass(frozen=True, eq=False)
class LiftResult:
    h: np.ndarray
    central_witness: complex
    twisted: Involution
    real_form: RealFormType
    residual: float


def is_irreducible(rep: Representation, tol: Tol = DEFAULT_TOL) -> bool:
    """Burnside test: the generators span all of M_3 as a unital algebra.

    The span is grown by left multiplication, orthonormalizing as we go;
    it stabilizes in at most 9 rounds, and irreducibility is equivalent to
    reaching dimension 9.
    """
    basis: list[np.ndarray] = []
    mats: list[np.ndarray] = []

    def try_add(m) -> bool:
        v = m.reshape(-1)
        nv0 = np.linalg.norm(v)
        if nv0 < 1e-300:
            return False
        for b in basis:
            v = v - (b.conj() @ v) * b
        nv = np.linalg.norm(v)
        if nv <= 1e-9 * nv0:
            return False
        basis.append(v / nv)
        mats.append(m)
        return True

    try_add(IDENTITY)
    frontier = [IDENTITY]
    for _ in range(MAX_SPAN_ROUNDS):
        new_frontier = []
        for m in frontier:
            for g in rep.generators:
                prod = g @ m
                if try_add(prod):
                    new_frontier.append(prod)
        if not new_frontier or len(basis) == 9:
            break
        frontier = new_frontier
    return len(basis) == 9


def goodness(rep: Representation, tol: Tol = DEFAULT_TOL) -> GoodnessReport:
    """Irreducibility, commutant dimension and the closed-orbit proxy.

    For a single generator, semisimplicity is diagonalizability; for
    tuples it is folded into irreducibility (irreducible tuples have
    closed conjugation orbits).  Goodness coincides with irreducibility
    for SL(3).
    """
    irr = is_irreducible(rep, tol)
    cdim = commutant_dim(list(rep.generators), tol)
    if len(rep.generators) == 1:
        semi = spectrum(rep.generators[0], tol).diagonalizable
    else:
        semi = irr
    return GoodnessReport(irreducible=irr, commutant_dimension=cdim, semisimple=semi, good=irr)


def _intertwiner_kernel(pairs) -> list[np.ndarray]:
    """Basis of {h : a h = h b for all (a, b)} via the stacked vec system."""
    blocks = []
    for a, b in pairs:
        blocks.append(np.kron(np.eye(3), a) - np.kron(b.T, np.eye(3)))
    system = np.vstack(blocks)
    _, s, vh = np.linalg.svd(system)
    cutoff = 1e-8 * max(1.0, float(s[0]))
    return [vh[i].conj().reshape((3, 3), order="F") for i in range(9) if s[i] <= cutoff]


def solve_intertwiner(rep: Representation, t: Involution, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Unimodular h with rho_i h = h t(rho_i) for every generator.

    The equations stack into a 9s x 9 linear system over vec(h); a
    one-dimensional kernel yields h after normalizing det h = 1 by the
    principal cube root.  No kernel means the character is not real for t;
    a larger kernel means the representation is not good and the choice of
    h is ambiguous.
    """
    kernel = _intertwiner_kernel([(a, t.apply(a, tol)) for a in rep.generators])
    if not kernel:
        raise NoIntertwiner("no nonzero intertwiner: character is not real for t")
    if len(kernel) > 1:
        raise NotUnique(f"intertwiner space has dimension {len(kernel)}")
    h = kernel[0]
    dt = det(h)
    if abs(dt) < 1e-8:
        raise NoIntertwiner("intertwiner space is spanned by a singular matrix")
    return h / dt ** (1.0 / 3.0)


def conjugacy_intertwiner(first, second, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Unimodular h with a_i h = h b_i for two tuples of matrices.

    Decides simultaneous conjugacy constructively: the kernel of the
    stacked system is searched for an invertible element (the generic
    element is invertible whenever one exists).  Raises NoIntertwiner if
    the tuples are not simultaneously conjugate.
    """
    first = [mat3(a) for a in first]
    second = [mat3(b) for b in second]
    if len(first) != len(second) or not first:
        raise ValueError("need two matrix tuples of equal positive length")
    kernel = _intertwiner_kernel(list(zip(first, second)))
    if not kernel:
        raise NoIntertwiner("the tuples are not simultaneously conjugate")
    rng = np.random.default_rng(0)
    candidates = list(kernel)
    for _ in range(50):
        coeff = rng.standard_normal(len(kernel)) + 1j * rng.standard_normal(len(kernel))
        candidates.append(sum(c * k for c, k in zip(coeff, kernel)))
    for h in candidates:
        dt = det(h)
        if abs(dt) > 1e-6 * max(1.0, fro(h)) ** 3:
            return h / dt ** (1.0 / 3.0)
    raise NoIntertwiner("intertwiner space contains no invertible element")


def character_is_real(rep: Representation, t: Involution, tol: Tol = DEFAULT_TOL) -> bool:
    """True iff the character of a good representation is fixed by t."""
    if not goodness(rep, tol).good:
        raise NotGood("character comparison requires a good representation")
    try:
        solve_intertwiner(rep, t, tol)
    except NoIntertwiner:
        return False
    return True


def lift(rep: Representation, t: Involution, tol: Tol = DEFAULT_TOL) -> LiftResult:
    """Lift a good representation with t-real character into a real form.

    Solves for the intertwiner h, checks the central witness h * t(h),
    twists t by h, and identifies the twisted real form; the residual is
    the largest deviation of a generator from being fixed by the twisted
    involution.
    """
    report = goodness(rep, tol)
    if not report.good:
        raise NotGood("only good representations can be lifted")
    h = solve_intertwiner(rep, t, tol)
    witness = h @ t.apply(h, tol)
    zeta = central_scalar(witness, tol)
    if zeta is None:
        raise NotCentral("h * t(h) is not central")
    twisted = twist(t, h, tol)
    form = identify_real_form(twisted, tol)
    residual = max(fro(twisted.apply(g, tol) - g) for g in rep.generators)
    return LiftResult(h=h, central_witness=zeta, twisted=twisted, real_form=form, residual=residual)


def witness_label(zeta: complex) -> str:
    """Name of a central element: '1', 'omega' or 'omega^2'."""
    for k, name in ((0, "1"), (1, "omega"), (2, "omega^2")):
        if abs(zeta - OMEGA**k) < 1e-6:
            return name
    raise ValueError(f"{zeta} is not a cube root of unity")


def representation_from_json(obj) -> tuple[Representation, Involution]:
    """Decode {"generators": [matrix...], "involution": ...}."""
    if not isinstance(obj, dict) or "generators" not in obj:
        raise ValueError("representation JSON needs a 'generators' field")
    gens = [mat3_from_json(g) for g in obj["generators"]]
    t = involution_from_json(obj.get("involution", "tau0"))
    return Representation(tuple(gens)), t


def lift_result_to_json(result: LiftResult) -> dict:
    return {
        "h": mat3_to_json(result.h),
        "central_witness": witness_label(result.central_witness),
        "twisted": involution_to_json(result.twisted),
        "real_form": result.real_form.value,
        "residual": result.residual,
    }
