"""Exact computations with frieze patterns.

Modules: ``exact`` (rationals and small matrices), ``coxeter`` (classical
friezes), ``polygon`` (triangulations, dissections and their matrices),
``quiverfrieze`` (friezes on repetition quivers), ``sltiling`` (SL_{k+1}
friezes and dualities) and ``cli``.
"""

from . import coxeter, exact, polygon, quiverfrieze, sltiling
from .errors import FriezeError

__all__ = ["coxeter", "exact", "polygon", "quiverfrieze", "sltiling", "FriezeError"]
__version__ = "0.1.0"
