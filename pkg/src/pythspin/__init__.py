"""Exact arithmetic for Pythagorean spinors, Hall trees, the Apollonian window and n-tuples."""
from . import algebra, clifford, gasket, hall, spinor, tuples
from .algebra import AlgebraKind, Element
from .errors import DomainError
from .spinor import Spinor, Triple, euclid, spinor_of

__all__ = [
    "algebra",
    "clifford",
    "gasket",
    "hall",
    "spinor",
    "tuples",
    "AlgebraKind",
    "Element",
    "DomainError",
    "Spinor",
    "Triple",
    "euclid",
    "spinor_of",
]
