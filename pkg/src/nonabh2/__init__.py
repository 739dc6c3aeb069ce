"""Finite models of non-abelian H^2: kernels, cocycles, extensions and neutrality."""

from .errors import SizeLimitExceeded
from .groups import FiniteGroup, GroupMap, build_group
from .kernels import Kernel, TwoCocycle, enumerate_h2, obstruction, validate_kernel
from .extensions import Extension, cocycle_to_extension, extension_to_cocycle, find_splitting

__version__ = "0.1.0"

__all__ = [
    "FiniteGroup", "GroupMap", "build_group", "Kernel", "TwoCocycle", "validate_kernel",
    "obstruction", "enumerate_h2", "Extension", "cocycle_to_extension",
    "extension_to_cocycle", "find_splitting", "SizeLimitExceeded",
]
