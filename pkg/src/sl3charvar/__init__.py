"""Real points of the SL(3,C) character variety of Z.

The library classifies SU(2,1) elements up to conjugacy, enumerates fibers
of the comparison map between the real and complex conjugation quotients,
computes first Galois cohomology sets of element stabilizers, and lifts
real characters of free groups to representations in a real form of
SL(3,C).
"""

from .linalg import (
    DEFAULT_TOL,
    IDENTITY,
    OMEGA,
    Tol,
    Spectrum,
    char_poly_sl3,
    commutant_dim,
    det,
    herm_signature,
    inverse,
    mat3,
    mat3_from_json,
    mat3_to_json,
    spectrum,
)
from .involutions import (
    CENTER,
    Involution,
    RealFormType,
    TAU0,
    TAU1,
    TAU2,
    conjugate_involution,
    fixed_lie_algebra,
    identify_real_form,
    involution_from_json,
    involution_to_json,
    twist,
)
from .su21 import (
    CanonicalForm,
    ElementClass,
    EllipticForm,
    HermitianModel,
    LoxodromicForm,
    canonical,
    classify,
    eig_minus,
    elliptic_form,
    form_from_json,
    form_to_json,
    goldman_f,
    loxodromic_form,
    representative,
    same_orbit,
)
from .quotients import (
    RealSlice,
    StabilizerKind,
    Su21Region,
    TraceCoords,
    companion_lift,
    diagonal_lift,
    fiber_count_sl3r,
    fiber_count_su21,
    fiber_enumerate_su21,
    power_trace,
    stabilizer_kind,
    su21_region,
    su3_in_image,
    trace_coords,
)
from .cohomology import (
    Cocycle,
    H1Class,
    classify_cocycle,
    fiber_classes_su21,
    fiber_h1_kernel_bound,
    h1_cardinality,
    h1_enumerate,
    is_cocycle,
    phi_map,
)
from .lifting import (
    GoodnessReport,
    LiftResult,
    Representation,
    character_is_real,
    conjugacy_intertwiner,
    goodness,
    is_irreducible,
    lift,
    solve_intertwiner,
)

__all__ = [name for name in dir() if not name.startswith("_")]
