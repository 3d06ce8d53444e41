"""Conjugacy classification of SU(2,1) elements.

Elements are classified by dynamics: loxodromic (an eigenvalue off the
unit circle), elliptic (diagonalizable, unit-modulus spectrum) or
parabolic.  Elliptic classes carry a marked eigenvalue eig^-, the one
acting on the negative-type eigenvector of the Hermitian form; the pair
(unordered angle pair, marked angle) resp. the contracting eigenvalue
lambda is a complete conjugacy invariant.  Two Hermitian forms of
signature (2,1) are used, diag(1,1,-1) for elliptic representatives and
the antidiagonal form for loxodromic/parabolic ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotElliptic, NotInGroup, NotSemisimpleInGroup
from .linalg import (
    DEFAULT_TOL,
    EIG_CLUSTER_FLOOR,
    Spectrum,
    Tol,
    det,
    eigenspace,
    fro,
    mat3,
    spectrum,
)

TWO_PI = 2.0 * math.pi

_H1 = np.diag([1.0, 1.0, -1.0]).astype(complex)
_H2 = np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=complex)

# Fixed congruence C with C* H1 C = H2; C is real, symmetric and C^2 = I,
# so conjugation by C converts H2-isometries into H1-isometries.
_C = np.array(
    [
        [1 / math.sqrt(2), 0, 1 / math.sqrt(2)],
        [0, 1, 0],
        [1 / math.sqrt(2), 0, -1 / math.sqrt(2)],
    ],
    dtype=complex,
)


class HermitianModel(Enum):
    H1 = "h1"
    H2 = "h2"

    @property
    def matrix(self) -> np.ndarray:
        return _H1 if self is HermitianModel.H1 else _H2


def convert_model(m, src: HermitianModel, dst: HermitianModel) -> np.ndarray:
    """Conjugate an isometry of one model form into the other."""
    if src is dst:
        return np.array(m, dtype=complex)
    return _C @ m @ _C


class ElementClass(Enum):
    ELLIPTIC_REGULAR = "elliptic_regular"
    ELLIPTIC_REFLECTION_LINE = "elliptic_reflection_line"
    ELLIPTIC_REFLECTION_POINT = "elliptic_reflection_point"
    ELLIPTIC_CENTRAL = "elliptic_central"
    PARABOLIC = "parabolic"
    LOXODROMIC = "loxodromic"


_ELLIPTIC = {
    ElementClass.ELLIPTIC_REGULAR,
    ElementClass.ELLIPTIC_REFLECTION_LINE,
    ElementClass.ELLIPTIC_REFLECTION_POINT,
    ElementClass.ELLIPTIC_CENTRAL,
}


def norm_angle(a: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    a = math.fmod(float(a), TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:
        a -= TWO_PI
    return a


def angle_dist(a: float, b: float) -> float:
    """Distance on the circle R/2piZ."""
    d = math.fmod(a - b, TWO_PI)
    if d < -math.pi:
        d += TWO_PI
    elif d > math.pi:
        d -= TWO_PI
    return abs(d)


@dataclass(frozen=True)
class EllipticForm:
    """Angles (a, b) unordered with a <= b, plus the marked angle c."""

    a: float
    b: float
    c_marked: float


@dataclass(frozen=True)
class LoxodromicForm:
    """Contracting eigenvalue, 0 < |lam| < 1."""

    lam: complex


CanonicalForm = EllipticForm | LoxodromicForm


def elliptic_form(a: float, b: float, c_marked: float, sum_tol: float = 1e-6) -> EllipticForm:
    """Normalized elliptic invariant; a+b+c must vanish mod 2*pi."""
    a, b, c = norm_angle(a), norm_angle(b), norm_angle(c_marked)
    if a > b:
        a, b = b, a
    if angle_dist(a + b + c, 0.0) > sum_tol:
        raise ValueError("elliptic angles must sum to 0 mod 2*pi")
    return EllipticForm(a, b, c)


def loxodromic_form(lam: complex) -> LoxodromicForm:
    lam = complex(lam)
    if not (0.0 < abs(lam) < 1.0):
        raise ValueError("loxodromic parameter must satisfy 0 < |lambda| < 1")
    return LoxodromicForm(lam)


def forms_equal(f1: CanonicalForm, f2: CanonicalForm, atol: float = 1e-6) -> bool:
    """Equality of canonical forms with wraparound-aware angle comparison."""
    if isinstance(f1, EllipticForm) and isinstance(f2, EllipticForm):
        if angle_dist(f1.c_marked, f2.c_marked) > atol:
            return False
        straight = angle_dist(f1.a, f2.a) <= atol and angle_dist(f1.b, f2.b) <= atol
        crossed = angle_dist(f1.a, f2.b) <= atol and angle_dist(f1.b, f2.a) <= atol
        return straight or crossed
    if isinstance(f1, LoxodromicForm) and isinstance(f2, LoxodromicForm):
        return abs(f1.lam - f2.lam) <= atol
    return False


def goldman_f(z) -> float:
    """The trace-discriminant function |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27.

    Negative on traces of regular elliptic elements, zero on boundary
    classes, positive exactly on loxodromic traces.
    """
    z = complex(z)
    return abs(z) ** 4 - 8.0 * (z**3).real + 18.0 * abs(z) ** 2 - 27.0


def in_group(m, model: HermitianModel, tol: Tol = DEFAULT_TOL) -> bool:
    """True iff m preserves the model form and has determinant 1."""
    h = model.matrix
    scale = max(1.0, fro(m)) ** 2
    if fro(m.conj().T @ h @ m - h) > max(tol.abs_eps, 1e-9) * scale:
        return False
    return abs(det(m) - 1.0) <= max(tol.abs_eps, 1e-9) * max(1.0, fro(m)) ** 3


def _unit_eps(m, tol: Tol) -> float:
    return max(tol.abs_eps, EIG_CLUSTER_FLOOR) * max(1.0, fro(m))


def _eig_minus_value(m, spec: Spectrum, model: HermitianModel, tol: Tol) -> complex:
    """Eigenvalue whose eigenspace carries a negative vector of the form."""
    h = model.matrix
    thr = _unit_eps(m, tol)
    for e in spec.eigenvalues:
        basis = eigenspace(m, e.value, thr)
        gram = basis.conj().T @ h @ basis
        vals = np.linalg.eigvalsh((gram + gram.conj().T) / 2.0)
        if np.any(vals < -1e-8):
            return e.value / abs(e.value)
    raise NotElliptic("no eigenvector of negative type found")


def classify(m, model: HermitianModel, tol: Tol = DEFAULT_TOL) -> ElementClass:
    """Dynamical type of a group element, up to SU(2,1) conjugacy.

    Loxodromic iff an eigenvalue has modulus away from 1; otherwise
    elliptic iff diagonalizable, with the central/reflection subtypes read
    off the multiplicities and the marked eigenvalue; parabolic otherwise.
    """
    m = mat3(m)
    if not in_group(m, model, tol):
        raise NotInGroup("matrix does not preserve the form or has det != 1")
    spec = spectrum(m, tol)
    eps = _unit_eps(m, tol)
    if any(abs(abs(e.value) - 1.0) > eps for e in spec.eigenvalues):
        return ElementClass.LOXODROMIC
    if not spec.diagonalizable:
        return ElementClass.PARABOLIC
    if len(spec.eigenvalues) == 1:
        return ElementClass.ELLIPTIC_CENTRAL
    if len(spec.eigenvalues) == 3:
        return ElementClass.ELLIPTIC_REGULAR
    marked = _eig_minus_value(m, spec, model, tol)
    double = next(e for e in spec.eigenvalues if e.algebraic == 2)
    if abs(marked - double.value / abs(double.value)) <= eps:
        return ElementClass.ELLIPTIC_REFLECTION_LINE
    return ElementClass.ELLIPTIC_REFLECTION_POINT


def eig_minus(m, model: HermitianModel, tol: Tol = DEFAULT_TOL) -> complex:
    """The marked eigenvalue of an elliptic element (unit modulus)."""
    m = mat3(m)
    cls = classify(m, model, tol)
    if cls not in _ELLIPTIC:
        raise NotElliptic(f"element is {cls.value}, not elliptic")
    return _eig_minus_value(m, spectrum(m, tol), model, tol)


def canonical(m, model: HermitianModel, tol: Tol = DEFAULT_TOL) -> CanonicalForm:
    """Canonical conjugacy invariant of a semisimple group element."""
    m = mat3(m)
    cls = classify(m, model, tol)
    if cls is ElementClass.PARABOLIC:
        raise NotSemisimpleInGroup("parabolic elements have no canonical form here")
    spec = spectrum(m, tol)
    if cls is ElementClass.LOXODROMIC:
        lam = min((e.value for e in spec.eigenvalues), key=abs)
        return loxodromic_form(lam)
    marked = _eig_minus_value(m, spec, model, tol)
    eps = _unit_eps(m, tol)
    rest: list[float] = []
    used_marked = False
    for e in spec.eigenvalues:
        val = e.value / abs(e.value)
        mult = e.algebraic
        if not used_marked and abs(val - marked) <= eps:
            mult -= 1
            used_marked = True
        rest.extend([float(np.angle(val)) % TWO_PI] * mult)
    a, b = sorted(norm_angle(x) for x in rest)
    return elliptic_form(a, b, float(np.angle(marked)))


def representative(form: CanonicalForm) -> tuple[np.ndarray, HermitianModel]:
    """Model matrix of a canonical form.

    Elliptic forms give diag(e^{ia}, e^{ib}, e^{ic}) preserving
    diag(1,1,-1), the marked angle in the negative slot; loxodromic forms
    give diag(lam, conj(lam)/lam, conj(lam)^-1) preserving the antidiagonal
    form.
    """
    if isinstance(form, EllipticForm):
        d = np.diag(np.exp(1j * np.array([form.a, form.b, form.c_marked])))
        return d.astype(complex), HermitianModel.H1
    if isinstance(form, LoxodromicForm):
        lam = form.lam
        d = np.diag([lam, lam.conjugate() / lam, 1.0 / lam.conjugate()])
        return d.astype(complex), HermitianModel.H2
    raise TypeError(f"not a canonical form: {form!r}")


def same_orbit(m1, m2, model: HermitianModel, tol: Tol = DEFAULT_TOL, atol: float = 1e-6) -> bool:
    """True iff two semisimple elements are SU(2,1)-conjugate."""
    return forms_equal(canonical(m1, model, tol), canonical(m2, model, tol), atol)


def form_to_json(form: CanonicalForm) -> dict:
    if isinstance(form, EllipticForm):
        return {"type": "elliptic", "a": form.a, "b": form.b, "c": form.c_marked}
    return {"type": "loxodromic", "lambda": [form.lam.real, form.lam.imag]}


def form_from_json(obj) -> CanonicalForm:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("canonical form JSON needs a 'type' field")
    if obj["type"] == "elliptic":
        return elliptic_form(float(obj["a"]), float(obj["b"]), float(obj["c"]))
    if obj["type"] == "loxodromic":
        re, im = obj["lambda"]
        return loxodromic_form(complex(float(re), float(im)))
    raise ValueError(f"unknown canonical form type {obj['type']!r}")
