"""String and band combinatorics for gentle algebras: Hom and Ext^1 between
string modules, Auslander-Reiten sequences, an exact linear-algebra oracle,
and gentle algebras of triangulated surfaces."""

from .algebra import AlgebraPresentation, Arrow, Quiver, validate
from .homext import ext_nonzero, has_extension, hom_dim_combinatorial, is_exceptional
from .strings import assign_signs, canonical, enumerate_bands, enumerate_strings, parse_string
from .words import Letter, StringWord, parse_word

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation", "Arrow", "Quiver", "validate",
    "ext_nonzero", "has_extension", "hom_dim_combinatorial", "is_exceptional",
    "assign_signs", "canonical", "enumerate_bands", "enumerate_strings", "parse_string",
    "Letter", "StringWord", "parse_word",
]
