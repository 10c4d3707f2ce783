"""Exact constants for formal-degree quotients under maximal parabolic induction.

Core layers: root systems and data (:mod:`fdquot.roots`), maximal parabolic
packages (:mod:`fdquot.parabolic`), lattice structure constants
(:mod:`fdquot.lattice`), motive degrees and point counts
(:mod:`fdquot.motive`), the symbolic residue calculus (:mod:`fdquot.mero`),
and the case database with verification (:mod:`fdquot.cases`).  The HTTP
service lives in :mod:`fdquot.service`; the CLI in :mod:`fdquot.cli` is a
thin client of it.
"""

__version__ = "0.1.0"

from .errors import (
    FdquotError,
    InputError,
    NotFiniteTypeError,
    StructureError,
    UnknownNameError,
)
from .roots import (
    BUILTIN_NAMES,
    CartanMatrix,
    Coroot,
    Root,
    RootDatum,
    RootSystem,
    WeylElement,
    build_root_system,
    builtin_datum,
    cartan_entries,
    datum_from_json,
    longest_element,
    weyl_order,
)
from .parabolic import (
    LeviData,
    RelativeWeylData,
    ShahidiLevels,
    adjoint_dimension_check,
    levi_data,
    relative_weyl,
    shahidi_levels,
)
from .lattice import OrbitVolumeData, StructureConstants, orbit_volume, structure_constants
from .motive import (
    MotiveData,
    gamma_gm,
    iwahori_volume_exponent,
    measure_quotient_factor,
    motive_degrees,
    point_count,
    root_subgroup_index,
)
from .qpoly import QRational
from .mero import (
    ConstSym,
    Cyclotomic,
    DerivationReport,
    GammaAxioms,
    GammaSym,
    LaurentLeading,
    QPower,
    adjoint_quotient_expression,
    derive_main_theorem,
    laurent_leading,
    mu_expression,
    rescale,
)
from .cases import (
    CaseRecord,
    VerificationReport,
    get_case,
    load_bundled_cases,
    semisimple_evaluation,
    verify_all,
    verify_case,
)

__all__ = [name for name in dir() if not name.startswith("_")]
