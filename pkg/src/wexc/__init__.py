"""Exact classification of finite linear group actions in dimensions 3 and 4."""

from .catalog import (
    CatalogEntry,
    QuadricFamilySpec,
    build_quadric_family,
    catalog_entry,
    catalog_get,
    catalog_names,
    parse_group_file,
)
from .classify import (
    ActionClass,
    Verdict,
    check_weakly_exceptional,
    classify_action,
)
from .cyclotomic import Cyclotomic, parse_cyclotomic, root_of_unity
from .errors import CapExceeded, InternalInvariantError, ParseError
from .linalg import Matrix, Subspace
from .matgroup import MatGroup
from .repthy import min_semi_invariant_degree, semi_invariants

__all__ = [
    "ActionClass",
    "CatalogEntry",
    "CapExceeded",
    "Cyclotomic",
    "InternalInvariantError",
    "MatGroup",
    "Matrix",
    "ParseError",
    "QuadricFamilySpec",
    "Subspace",
    "Verdict",
    "build_quadric_family",
    "catalog_entry",
    "catalog_get",
    "catalog_names",
    "check_weakly_exceptional",
    "classify_action",
    "min_semi_invariant_degree",
    "parse_cyclotomic",
    "parse_group_file",
    "root_of_unity",
    "semi_invariants",
]

__version__ = "0.1.0"
