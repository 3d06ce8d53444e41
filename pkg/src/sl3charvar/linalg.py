"""Fixed-size complex linear algebra on 3x3 matrices.

Everything else in the package is built on the routines here: cofactor
determinants and adjugates, the closed-form cubic for eigenvalues with
multiplicity clustering, rank by complete-pivoting elimination, Hermitian
signatures and commutant dimensions.

Matrices are numpy arrays of shape (3, 3) and dtype complex128.  All
functions are pure and never mutate their arguments, so everything here is
safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotUnimodular, Singular

#: primitive cube root of unity, exp(2*pi*i/3)
OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)

IDENTITY = np.eye(3, dtype=complex)

#: Double roots of a cubic are only determined to about sqrt(machine eps)
#: by any root finder, so decisions about eigenvalue multiplicity use this
#: floor rather than Tol.abs_eps (which defaults far below it).
EIG_CLUSTER_FLOOR = 1e-7


@dataclass(frozen=True)
class Tol:
    """Tolerance policy shared by every operation in the package."""

    abs_eps: float = 1e-9
    rel_eps: float = 1e-9

    def __post_init__(self):
        if not (self.abs_eps > 0.0 and self.rel_eps > 0.0):
            raise ValueError("tolerance epsilons must be strictly positive")


DEFAULT_TOL = Tol()


def mat3(rows) -> np.ndarray:
    """Build a fresh 3x3 complex matrix, rejecting non-finite entries."""
    m = np.array(rows, dtype=complex)
    if m.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def fro(m) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(m))


def det(m) -> complex:
    """Determinant by cofactor expansion along the first row."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate(m) -> np.ndarray:
    """Classical adjugate, so m @ adjugate(m) = det(m) * I."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return np.array(
        [
            [e * i - f * h, c * h - b * i, b * f - c * e],
            [f * g - d * i, a * i - c * g, c * d - a * f],
            [d * h - e * g, b * g - a * h, a * e - b * d],
        ],
        dtype=complex,
    )


def second_invariant(m) -> complex:
    """Sum of the principal 2x2 minors (= trace of the adjugate)."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return (a * e - b * d) + (a * i - c * g) + (e * i - f * h)


def inverse(m, tol: Tol = DEFAULT_TOL) -> np.ndarray:
    """Inverse via adjugate/determinant.  Raises Singular below tolerance."""
    dt = det(m)
    if abs(dt) <= tol.abs_eps:
        raise Singular(f"determinant {dt} below tolerance {tol.abs_eps}")
    return adjugate(m) / dt


def is_unimodular(m, tol: Tol = DEFAULT_TOL) -> bool:
    """True if det(m) = 1 at tolerance (determinant is cubic in the entries)."""
    scale = max(1.0, fro(m)) ** 3
    return abs(det(m) - 1.0) <= tol.abs_eps * scale


def char_poly_sl3(m, tol: Tol = DEFAULT_TOL) -> tuple[complex, complex]:
    """Coefficients (z, w) = (tr m, tr m^-1) for unimodular m.

    The characteristic polynomial of m is then X^3 - z X^2 + w X - 1.
    tr(m^-1) is read off the adjugate, which equals the inverse when
    det m = 1.
    """
    if not is_unimodular(m, tol):
        raise NotUnimodular(f"det = {det(m)}, expected 1")
    return complex(np.trace(m)), complex(second_invariant(m))


def solve_cubic(b, c, d) -> np.ndarray:
    """The three complex roots of X^3 + b X^2 + c X + d.

    Cardano's formula on the depressed cubic, with the cube-root branch
    chosen to avoid cancellation, followed by guarded Newton polishing.
    Repeated roots come out separated by about sqrt(machine eps); callers
    that care about multiplicity must cluster (see spectrum).
    """
    b, c, d = complex(b), complex(c), complex(d)
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    if max(abs(p), abs(q)) < 1e-300:
        ts = [0j, 0j, 0j]
    else:
        s = np.sqrt(complex(q * q / 4.0 + p**3 / 27.0))
        u3 = -q / 2.0 + s
        alt = -q / 2.0 - s
        if abs(alt) > abs(u3):
            u3 = alt
        u = u3 ** (1.0 / 3.0)
        ts = []
        for k in range(3):
            uk = u * OMEGA**k
            ts.append(uk - p / (3.0 * uk))
    roots = np.array([t - b / 3.0 for t in ts], dtype=complex)

    def _poly(x):
        return ((x + b) * x + c) * x + d

    # Newton polish, kept only when it reduces the residual.
    for i in range(3):
        x = roots[i]
        for _ in range(2):
            fx = _poly(x)
            dfx = (3.0 * x + 2.0 * b) * x + c
            if abs(dfx) < 1e-30:
                break
            x_new = x - fx / dfx
            if abs(_poly(x_new)) < abs(fx):
                x = x_new
            else:
                break
        roots[i] = x
    return roots


@dataclass(frozen=True)
class Eigenvalue:
    value: complex
    algebraic: int
    geometric: int


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[Eigenvalue, ...]
    diagonalizable: bool

    @property
    def values(self) -> list[complex]:
        """Eigenvalues repeated with algebraic multiplicity."""
        out = []
        for e in self.eigenvalues:
            out.extend([e.value] * e.algebraic)
        return out


def rank(a, threshold: float) -> int:
    """Rank by complete-pivoting Gaussian elimination.

    Pivots with modulus <= threshold are treated as zero; threshold is an
    absolute cutoff, scaled by the caller.
    """
    w = np.array(a, dtype=complex)
    if w.ndim != 2:
        raise ValueError("rank expects a 2-d array")
    r = 0
    active_rows = list(range(w.shape[0]))
    active_cols = list(range(w.shape[1]))
    while active_rows and active_cols:
        sub = np.abs(w[np.ix_(active_rows, active_cols)])
        k = int(np.argmax(sub))
        i, j = divmod(k, len(active_cols))
        if sub[i, j] <= threshold:
            break
        pi, pj = active_rows[i], active_cols[j]
        pivot = w[pi, pj]
        for ri in active_rows:
            if ri != pi:
                w[ri, :] -= (w[ri, pj] / pivot) * w[pi, :]
        active_rows.remove(pi)
        active_cols.remove(pj)
        r += 1
    return r


def spectrum(m, tol: Tol = DEFAULT_TOL) -> Spectrum:
    """Eigenvalues with multiplicities via the closed-form cubic.

    Roots closer than max(abs_eps, EIG_CLUSTER_FLOOR) * max(1, ||m||) are
    clustered into one eigenvalue; geometric multiplicity is 3 - rank(m -
    lambda I) with the same cutoff, since lambda itself is only known to
    cluster accuracy.
    """
    e1 = complex(np.trace(m))
    e2 = second_invariant(m)
    e3 = det(m)
    scale = max(1.0, fro(m))
    # A triple root is only determined to eps^(1/3) by any root finder, so
    # detect it on the depressed-cubic coefficients instead: both vanish
    # exactly at a triple root and grow like gap^2 away from it.
    b, c, d = -e1, e2, -e3
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    if abs(p) <= 1e-10 * scale**2 and abs(q) <= 1e-10 * scale**3:
        roots = np.array([e1 / 3.0] * 3, dtype=complex)
    else:
        roots = solve_cubic(b, c, d)
    cluster_tol = max(tol.abs_eps, EIG_CLUSTER_FLOOR) * scale

    clusters: list[list[complex]] = []
    for r in roots:
        for cl in clusters:
            if abs(r - np.mean(cl)) <= cluster_tol:
                cl.append(r)
                break
        else:
            clusters.append([r])

    eigs = []
    diagonalizable = True
    for cl in clusters:
        lam = complex(np.mean(cl))
        alg = len(cl)
        geo = 3 - rank(m - lam * IDENTITY, cluster_tol)
        geo = min(max(geo, 1), alg)
        if geo != alg:
            diagonalizable = False
        eigs.append(Eigenvalue(lam, alg, geo))
    return Spectrum(tuple(eigs), diagonalizable)


def eigenspace(m, lam, threshold: float) -> np.ndarray:
    """Orthonormal basis (columns) of the numerical kernel of m - lam*I."""
    _, s, vh = np.linalg.svd(m - lam * IDENTITY)
    mask = s <= threshold
    if not np.any(mask):
        # fall back to the most singular direction
        mask = np.zeros_like(s, dtype=bool)
        mask[-1] = True
    return vh[mask].conj().T


def herm_signature(h, tol: Tol = DEFAULT_TOL) -> tuple[int, int, int]:
    """Signature (p, n, z) of a Hermitian 3x3 matrix."""
    scale = max(1.0, fro(h))
    if fro(h - h.conj().T) > tol.abs_eps * scale:
        raise NotHermitian("matrix is not Hermitian at tolerance")
    vals = np.linalg.eigvalsh((h + h.conj().T) / 2.0)
    thr = tol.abs_eps * scale
    p = int(np.sum(vals > thr))
    n = int(np.sum(vals < -thr))
    return p, n, 3 - p - n


def commutant_dim(ms, tol: Tol = DEFAULT_TOL) -> int:
    """Complex dimension of {X : X m = m X for all m in ms}.

    The condition X m - m X = 0 is the linear system
    (m^T kron I - I kron m) vec(X) = 0 in column-major vec coordinates;
    the stacked system is 9k x 9 and its rank is computed by complete
    pivoting.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("commutant_dim needs at least one matrix")
    blocks = []
    for m in ms:
        blocks.append(np.kron(m.T, np.eye(3)) - np.kron(np.eye(3), m))
    stacked = np.vstack(blocks)
    scale = max(np.max(np.abs(stacked)), 1.0)
    threshold = max(tol.abs_eps, tol.rel_eps * scale)
    return 9 - rank(stacked, threshold)


def central_scalar(m, tol: Tol = DEFAULT_TOL):
    """If m = zeta*I with zeta a cube root of unity, return zeta, else None."""
    zeta = complex(np.trace(m)) / 3.0
    scale = max(1.0, fro(m))
    if fro(m - zeta * IDENTITY) > max(tol.abs_eps, 1e-8) * scale:
        return None
    for k in range(3):
        if abs(zeta - OMEGA**k) <= max(tol.abs_eps, 1e-7):
            return OMEGA**k if k else 1.0 + 0.0j
    return None


def mat3_to_json(m) -> list:
    """Encode as 3 rows of 3 [re, im] pairs; floats round-trip bit-exactly."""
    return [[[float(x.real), float(x.imag)] for x in row] for row in np.asarray(m)]


def mat3_from_json(obj) -> np.ndarray:
    """Decode the row/pair encoding produced by mat3_to_json."""
    if not isinstance(obj, list) or len(obj) != 3:
        raise ValueError("matrix JSON must be a list of 3 rows")
    rows = []
    for row in obj:
        if not isinstance(row, list) or len(row) != 3:
            raise ValueError("each matrix row must be a list of 3 entries")
        out = []
        for pair in row:
            if not isinstance(pair, list) or len(pair) != 2:
                raise ValueError("each entry must be a [re, im] pair")
            out.append(complex(float(pair[0]), float(pair[1])))
        rows.append(out)
    return mat3(rows)
