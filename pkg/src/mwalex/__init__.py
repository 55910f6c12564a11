"""Exact computation with plane curve Alexander polynomials, Mordell-Weil
sections of the elliptic threefold u^3 + v^2 = F over Q-towers, and
quasi-toric relations."""

from mwalex.algebra import (
    QQ,
    AlexPoly,
    FieldElem,
    FieldSpec,
    UPoly,
    alex_from_upoly,
    cyclotomic_polynomial,
    qq,
)
from mwalex.multipoly import RatFunc, TriPoly

__all__ = [
    "QQ",
    "qq",
    "FieldSpec",
    "FieldElem",
    "UPoly",
    "AlexPoly",
    "alex_from_upoly",
    "cyclotomic_polynomial",
    "TriPoly",
    "RatFunc",
]

__version__ = "0.1.0"
