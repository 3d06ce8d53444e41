"""Exception types raised by the library.

Each class corresponds to one failure mode of a public operation; all
inherit from CharVarError so callers can catch library errors in one go.
"""


class CharVarError(Exception):
    """Base class for all errors raised by this package."""


class Singular(CharVarError):
    """Matrix is not invertible at the working tolerance."""


class NotUnimodular(CharVarError):
    """Determinant is not 1 at the working tolerance."""


class NotHermitian(CharVarError):
    """Matrix is not equal to its conjugate transpose at tolerance."""


class NotCentral(CharVarError):
    """A product that must be a central element (scalar cube root of 1) is not."""


class DegenerateSolve(CharVarError):
    """A linear solve produced a fixed space of unexpected dimension."""


class UnknownSignature(CharVarError):
    """A trace-form signature does not match any real form of SL(3,C)."""


class NotInGroup(CharVarError):
    """Matrix does not preserve the Hermitian form, or has determinant != 1."""


class NotElliptic(CharVarError):
    """Operation requires an elliptic element."""


class NotSemisimpleInGroup(CharVarError):
    """Operation requires a semisimple (non-parabolic) group element."""


class NotSemisimple(CharVarError):
    """Operation requires a diagonalizable matrix."""


class KindMismatch(CharVarError):
    """Cocycle shape is inconsistent with its declared stabilizer kind."""


class UncoveredCombination(CharVarError):
    """Stabilizer/involution pair outside the tabulated cohomology cases."""


class NotRealTranslate(CharVarError):
    """The conjugated point is not fixed by the involution."""


class NotClosedOrbit(CharVarError):
    """Base point is not semisimple, so its conjugation orbit is not closed."""


class NoIntertwiner(CharVarError):
    """No nonzero intertwiner exists: the character is not real for this involution."""


class NotUnique(CharVarError):
    """Intertwiner space has dimension > 1 (representation is not good)."""


class NotGood(CharVarError):
    """Operation requires a good (irreducible) representation."""
