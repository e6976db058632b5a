"""Graded Specht modules of level-two cyclotomic KLR algebras for hook bipartitions."""

from .combinatorics import GenWord, Params
from .linalg import RATIONALS, Field, SparseMatrix, Subspace
from .module import HookSpechtModule

__all__ = ["Field", "GenWord", "HookSpechtModule", "Params", "RATIONALS", "SparseMatrix", "Subspace"]
__version__ = "0.1.0"
