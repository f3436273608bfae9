"""
Exception hierarchy for oa-core.

Input errors (bad documents, mismatched spaces, exceeded caps) are kept apart
from mathematical refutations so that callers, and the CLI exit codes, can
tell "you asked something malformed" from "the claim is false".
"""

from typing import Any, List, Optional


class OACoreError(Exception):
    """Base class for every error raised by oa-core."""


class StructuralError(OACoreError, ValueError):
    """Objects do not fit together (space mismatch, malformed values)."""


class EnumerationCapError(OACoreError):
    """An exhaustive enumeration would exceed a configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class KernelSyntaxError(OACoreError):
    """Kernel expression text does not follow the grammar."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class KernelEvaluationError(OACoreError, ArithmeticError):
    """Evaluation of a kernel expression failed (division by zero)."""


class NotAFragmentError(StructuralError):
    """An argument of a fragment operation is not a fragment of the anchor."""


class HomomorphismError(StructuralError):
    """A point map or set-map table does not define the requested homomorphism."""


class LateralIdealError(StructuralError):
    """A candidate lateral ideal violates one of its two axioms."""


class WorkspaceError(OACoreError):
    """A workspace document could not be loaded or resolved."""

    def __init__(self, message: str, diagnostics: Optional[List[str]] = None):
        super().__init__(message)
        self.diagnostics = list(diagnostics or [])

    def __str__(self) -> str:
        if not self.diagnostics:
            return super().__str__()
        lines = [super().__str__()] + [f"  - {d}" for d in self.diagnostics]
        return "\n".join(lines)


class MathematicalFailure(OACoreError):
    """A mathematical precondition is refuted; carries the refuting witness."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class NotAtomicError(MathematicalFailure):
    """An operator is not atomic subordinate to the given homomorphism."""


class PositivityError(MathematicalFailure):
    """An operator or partial map takes a negative value on a sampled element."""
