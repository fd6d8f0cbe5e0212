"""Finite-truncation models of semicrossed products by Z_+^d actions.

The package builds the left regular and orbit representations of the
algebra generated by S_s and C(X), cocycles, gauge projections, the
natural extension and its crossed product, and Fock space models, and
checks the identities relating them on finite windows.
"""

from .dynsys import CircleSystem, FiniteSystem, ShiftSystem, BlockMap
from .formats import parse_element, parse_system
from .repn import SymbolicElement, build_left_regular, build_orbit_rep, estimate_norm
from .semigroup import Character, GroupElement, SemigroupElement, Window

__all__ = [
    "BlockMap", "Character", "CircleSystem", "FiniteSystem", "GroupElement", "SemigroupElement",
    "ShiftSystem", "SymbolicElement", "Window", "build_left_regular", "build_orbit_rep",
    "estimate_norm", "parse_element", "parse_system",
]

__version__ = "0.1.0"
