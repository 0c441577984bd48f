"""Finite residuated lattices with the greatest-Boolean-below operator B."""

from __future__ import annotations

from .algebra import FiniteRL, build_algebra, chain, class_flags, is_closed_subset, is_isomorphic, product
from .boolean import (
    BAlgebra, B_from_negD, boolean_skeleton, compute_B, compute_D, compute_Delta, is_boolean,
    iterate_negD, joint_modalities, make_balgebra, modalities, negD_stabilization_index,
)
from .enumerate import enumerate_algebras
from .equations import Equation, QuasiEquation, basis_B, basis_D, basis_Delta, eval_term, holds
from .fixtures import fixture, fixtures
from .io import load_algebra
from .structure import (
    all_bfilters, all_congruences, congruence_to_filter, filter_to_congruence, is_bfilter,
    is_subdirectly_irreducible, principal_filter,
)
from .syntax import parse, to_text

__all__ = [
    "FiniteRL", "build_algebra", "chain", "class_flags", "is_closed_subset", "is_isomorphic", "product",
    "BAlgebra", "B_from_negD", "boolean_skeleton", "compute_B", "compute_D", "compute_Delta",
    "is_boolean", "iterate_negD", "joint_modalities", "make_balgebra", "modalities",
    "negD_stabilization_index", "enumerate_algebras",
    "Equation", "QuasiEquation", "basis_B", "basis_D", "basis_Delta", "eval_term", "holds",
    "fixture", "fixtures", "load_algebra",
    "all_bfilters", "all_congruences", "congruence_to_filter", "filter_to_congruence", "is_bfilter",
    "is_subdirectly_irreducible", "principal_filter", "parse", "to_text",
]
