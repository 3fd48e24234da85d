"""classbound: conjugacy class counts, extremal Frobenius groups, and
lower-bound verification for finite permutation groups."""

from .permutation import Permutation, format_cycles, parse_cycles
from .permgroup import (
    DEFAULT_ELEMENT_CAP,
    CapExceededError,
    ClassData,
    PermutationGroup,
    group_from_generators,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "PermutationGroup",
    "ClassData",
    "CapExceededError",
    "DEFAULT_ELEMENT_CAP",
    "group_from_generators",
    "parse_cycles",
    "format_cycles",
    "__version__",
]
