"""Max-plus spectral toolkit for the ultradiscrete KdV Lax system."""

from .maxplus import NEG_INF, MaxPlusMatrix
from .lax import Case, EigenSeq, Potential, Soliton

__all__ = ["NEG_INF", "MaxPlusMatrix", "Case", "EigenSeq", "Potential", "Soliton"]
__version__ = "0.1.0"
