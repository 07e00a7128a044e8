"""Signed Mahonian distributions over S_n and B_n, with brute-force checks."""

from .perm_core import Perm
from .qpoly import CycloElem, CycloPoly, IntPoly, TriPoly
from .signed_perm import OrderConvention, SignedPerm

__version__ = "0.1.0"

__all__ = [
    "Perm", "SignedPerm", "OrderConvention",
    "IntPoly", "TriPoly", "CycloElem", "CycloPoly",
]
