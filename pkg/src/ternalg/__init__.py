"""Exact computations for ternary and Z3-graded algebraic structures."""

__version__ = "0.1.0"

from .cyclotomic import Cyclotomic, CycI, CycMatrix, CycTensor3, omega
from .report import CheckResult

__all__ = ["Cyclotomic", "CycI", "CycMatrix", "CycTensor3", "omega", "CheckResult", "__version__"]
