"""
Schema definitions and validation for workspace documents.
"""

from .workspace import CHECK_COMMANDS, ValidationResult, WorkspaceSchema

__all__ = [
    "CHECK_COMMANDS",
    "ValidationResult",
    "WorkspaceSchema",
]
