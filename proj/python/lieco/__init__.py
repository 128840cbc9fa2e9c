"""Exact Lie algebra cohomology, central extensions, and coadjoint orbits.

Rationals cross the boundary as "p/q" strings; group coordinates and
witnesses are numpy arrays.
"""

from ._lieco import (
    Algebra,
    LiecoError,
    Realization,
    __version__,
    algebra,
    algebra_from_text,
    catalog_names,
    central_extension,
    characteristic_subalgebra,
    coboundary_of,
    contract,
    decompose,
    h2,
    load_algebra,
    omega,
    pseudo_class,
    pseudo_extension,
    realization,
    same_orbit,
    trivialize_extension,
    validate,
    witness_check,
)

__all__ = [
    "Algebra",
    "LiecoError",
    "Realization",
    "__version__",
    "algebra",
    "algebra_from_text",
    "catalog_names",
    "central_extension",
    "characteristic_subalgebra",
    "coboundary_of",
    "contract",
    "decompose",
    "h2",
    "load_algebra",
    "omega",
    "pseudo_class",
    "pseudo_extension",
    "realization",
    "same_orbit",
    "trivialize_extension",
    "validate",
    "witness_check",
]
