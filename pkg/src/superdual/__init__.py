"""Exact verification of super Schur-Weyl, Vust, W-superalgebra and Hecke dualities."""

from .exactlin import ExactMatrix, Subspace, algebra_closure, commutant, kernel, minimal_polynomial
from .glsuper import GlElement, nilpotent_from_partitions, regular_nilpotent
from .hecke import CharVector, HeckeOperatorSet
from .superindex import Pyramid, SuperIndex
from .tensoract import TensorSpace, phi_d, psi_d

__all__ = [
    "ExactMatrix", "Subspace", "algebra_closure", "commutant", "kernel", "minimal_polynomial",
    "GlElement", "nilpotent_from_partitions", "regular_nilpotent",
    "CharVector", "HeckeOperatorSet", "Pyramid", "SuperIndex", "TensorSpace", "phi_d", "psi_d",
]
__version__ = "0.1.0"
