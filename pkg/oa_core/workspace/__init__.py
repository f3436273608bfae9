"""
Workspace documents naming spaces, elements, kernels, homomorphisms,
operators, ideals and checks.
"""

from .document import SECTIONS, Workspace, WorkspaceLoader, load_workspace

__all__ = [
    "SECTIONS",
    "Workspace",
    "WorkspaceLoader",
    "load_workspace",
]
