"""Polynomial arithmetic, the Herg invariants and their checked identities."""

from .identities import verify_identities
from .invariants import (
    InvariantKind,
    br_polynomial,
    invariant,
    m_polynomial,
    pcut_raw,
    recursive_rcut,
    recursive_rspan,
)
from .polynomial import (
    ABVARS,
    RVARS,
    Poly,
    QuotientPoly,
    duality_subst,
    expand_x,
    normalize,
    partial_subst,
)

__all__ = [
    "ABVARS",
    "InvariantKind",
    "Poly",
    "QuotientPoly",
    "RVARS",
    "br_polynomial",
    "duality_subst",
    "expand_x",
    "invariant",
    "m_polynomial",
    "normalize",
    "partial_subst",
    "pcut_raw",
    "recursive_rcut",
    "recursive_rspan",
    "verify_identities",
]
