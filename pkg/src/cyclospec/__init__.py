"""Cyclic-group spectra of the seven symmetric integral relation algebras
on three atoms.

The catalog names them 1_7 through 7_7 by their mandatory cycle classes.
Core surface: verify colorings, build closed-form witnesses, search
exhaustively or at random, cross-check by SAT, and evaluate the union
bound that explains why large n are easy.
"""

from .algebra import Algebra, Color, CompositionLaw, CycleClass, by_name, catalog, composition_law
from .bounds import BoundReport, check_sumfree_lemma, union_bound, union_bound_threshold
from .constructions import (
    NO_CLOSED_FORM,
    NO_CONSTRUCTION,
    abelian_4_7_representable,
    construct,
    construct_4_7_abelian,
    sumfree_6_7,
)
from .group import AbelianGroup, CyclicGroup, Group, Subgroup, parse_group, subgroup_of_order
from .sat import CnfFormula, VarMap, decode, emit_dimacs, encode, parse_dimacs, solve
from .search import (
    DEFAULT_LIMIT,
    NOT_FOUND,
    PairClassMask,
    canonical_form,
    exists,
    find_all,
    find_all_masks,
    max_sumfree_size,
    random_search,
    spectrum,
)
from .verifier import Coloring, Violation, coloring_from_json, coloring_to_json, verify, verify_by_sumsets

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AbelianGroup",
    "BoundReport",
    "CnfFormula",
    "Color",
    "Coloring",
    "CompositionLaw",
    "CycleClass",
    "CyclicGroup",
    "DEFAULT_LIMIT",
    "Group",
    "NOT_FOUND",
    "NO_CLOSED_FORM",
    "NO_CONSTRUCTION",
    "PairClassMask",
    "Subgroup",
    "VarMap",
    "Violation",
    "abelian_4_7_representable",
    "by_name",
    "canonical_form",
    "catalog",
    "check_sumfree_lemma",
    "coloring_from_json",
    "coloring_to_json",
    "composition_law",
    "construct",
    "construct_4_7_abelian",
    "decode",
    "emit_dimacs",
    "encode",
    "exists",
    "find_all",
    "find_all_masks",
    "max_sumfree_size",
    "parse_dimacs",
    "parse_group",
    "random_search",
    "solve",
    "spectrum",
    "subgroup_of_order",
    "sumfree_6_7",
    "union_bound",
    "union_bound_threshold",
    "verify",
    "verify_by_sumsets",
    "__version__",
]
