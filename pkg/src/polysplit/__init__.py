"""Splitting fields of integer polynomials and the splitting criterion mod p."""

from polysplit.criterion import ScanReport, SchurWitness, bad_prime_bound, scan, schur_search
from polysplit.fpoly import ModPoly, has_root, splits_completely
from polysplit.splitfield import PrimitiveElement, family, primitive_element
from polysplit.zfactor import Factorization, factor_q
from polysplit.zpoly import IntPoly

__all__ = [
    "Factorization",
    "IntPoly",
    "ModPoly",
    "PrimitiveElement",
    "ScanReport",
    "SchurWitness",
    "bad_prime_bound",
    "factor_q",
    "family",
    "has_root",
    "primitive_element",
    "scan",
    "schur_search",
    "splits_completely",
]
