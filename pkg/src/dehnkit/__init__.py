"""dehnkit: positive Dehn twist factorizations, rewriting moves, and the
invariants of the Lefschetz fibrations they prescribe."""

from .words import FreeWord, FreeHom, commutator, KERNEL
from .matrices import IntMatrix, SNFResult, smith_normal_form, cokernel_invariants

__version__ = "0.1.0"

__all__ = [
    "FreeWord",
    "FreeHom",
    "commutator",
    "KERNEL",
    "IntMatrix",
    "SNFResult",
    "smith_normal_form",
    "cokernel_invariants",
    "__version__",
]
