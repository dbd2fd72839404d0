"""Racks, groups and Rota-Baxter / averaging operators on them."""

from .errors import AxiomError, CapExceeded, ClaimFalsified, PhiError, PreconditionError, TableError
from .magma import (
    CayleyTable,
    Permutation,
    PhiAction,
    are_isomorphic,
    automorphisms,
    classify,
    is_quandle,
    is_rack,
)
from .groups import FiniteGroup, check_group_rb, search_group_rb
from .constructions import UnionSpec, conj, core, dihedral, holomorph, named_group, semidirect_rack, trivial, union
from .operators import census, derived_averaging, derived_rb, derived_rrb, relative_census

__all__ = [
    "AxiomError", "CapExceeded", "ClaimFalsified", "PhiError", "PreconditionError", "TableError",
    "CayleyTable", "Permutation", "PhiAction", "are_isomorphic", "automorphisms", "classify",
    "is_quandle", "is_rack", "FiniteGroup", "check_group_rb", "search_group_rb", "UnionSpec",
    "conj", "core", "dihedral", "holomorph", "named_group", "semidirect_rack", "trivial", "union",
    "census", "derived_averaging", "derived_rb", "derived_rrb", "relative_census",
]
