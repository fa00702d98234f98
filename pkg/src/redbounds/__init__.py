"""Exact computation of reduction numbers, Hilbert coefficients and
Ratliff-Rush filtrations for m-primary ideals of local rings."""

__version__ = "0.1.0"

from .field import QQ, PrimeField
from .ideal import Ideal
from .orders import GREVLEX, LEX
from .poly import PolyRing
from .ring import RingPresentation

__all__ = [
    "QQ",
    "PrimeField",
    "Ideal",
    "GREVLEX",
    "LEX",
    "PolyRing",
    "RingPresentation",
]
