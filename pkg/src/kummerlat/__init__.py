"""Exact lattice isometry invariants and Lefschetz numbers of natural
automorphisms of generalized Kummer fourfolds."""

from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, euler_phi, moebius, zeta
from .isometries import (
    IsometryInvariants,
    LatticeIsometry,
    check_square_theorem,
    check_unimodular_corollary,
    compute_invariants,
    coinvariant_lattice,
    invariant_lattice,
    overlattice_by_glue,
)
from .lattices import (
    FiniteQuadraticForm,
    Lattice,
    Sublattice,
    direct_sum,
    discriminant_form,
    discriminant_group,
    dual_rescaled,
    fqf_from_diagonal,
    fqf_isomorphic,
    is_p_elementary,
    make_standard,
    orthogonal_complement,
    rescale,
    saturate,
    signature,
    sublattice,
)
from .lefschetz import (
    CharacterClass,
    LefschetzResult,
    TorusAutomorphism,
    catalog,
    corollary_value,
    exterior_power,
    fixed_characters,
    generating_series,
    lefschetz_poly_surface,
    lefschetz_q,
    run_catalog_table,
    torus_automorphism,
)
from .matrix import Matrix, integer_kernel, smith_normal_form
from .series import LaurentPoly, TruncatedBiSeries, series_invert

__version__ = "0.1.0"

__all__ = [
    "CharacterClass",
    "CyclotomicNumber",
    "FiniteQuadraticForm",
    "IsometryInvariants",
    "Lattice",
    "LatticeIsometry",
    "LaurentPoly",
    "LefschetzResult",
    "Matrix",
    "Sublattice",
    "TorusAutomorphism",
    "TruncatedBiSeries",
    "catalog",
    "check_square_theorem",
    "check_unimodular_corollary",
    "coinvariant_lattice",
    "compute_invariants",
    "corollary_value",
    "cyclotomic_polynomial",
    "direct_sum",
    "discriminant_form",
    "discriminant_group",
    "dual_rescaled",
    "euler_phi",
    "exterior_power",
    "fixed_characters",
    "fqf_from_diagonal",
    "fqf_isomorphic",
    "generating_series",
    "integer_kernel",
    "invariant_lattice",
    "is_p_elementary",
    "lefschetz_poly_surface",
    "lefschetz_q",
    "make_standard",
    "moebius",
    "orthogonal_complement",
    "overlattice_by_glue",
    "rescale",
    "run_catalog_table",
    "saturate",
    "series_invert",
    "signature",
    "smith_normal_form",
    "sublattice",
    "torus_automorphism",
    "zeta",
]
