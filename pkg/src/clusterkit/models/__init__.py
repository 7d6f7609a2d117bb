"""Concrete coordinate-ring models: generic matrices, minors, and the
seed constructions built on top of them."""

from .generic import GenericMatrix, generic_matrix, plucker, flag_minor

__all__ = [
    "GenericMatrix",
    "generic_matrix",
    "plucker",
    "flag_minor",
]
