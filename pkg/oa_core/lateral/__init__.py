"""
Lateral ideals, partial maps on them and the minimal extension.
"""

from .ideal import FINITE_KINDS, IdealAxiomsReport, IdealKind, LateralIdeal, ideal_contains
from .extension import (
    ChainReport,
    ExtensionAtomicReport,
    ExtensionPropertiesReport,
    MinimalExtension,
    PartialMap,
    PartialMapReport,
    extension_atomic_check,
    extension_chain_report,
    extension_properties,
    minimal_extension,
)

__all__ = [
    "FINITE_KINDS",
    "IdealAxiomsReport",
    "IdealKind",
    "LateralIdeal",
    "ideal_contains",
    "ChainReport",
    "ExtensionAtomicReport",
    "ExtensionPropertiesReport",
    "MinimalExtension",
    "PartialMap",
    "PartialMapReport",
    "extension_atomic_check",
    "extension_chain_report",
    "extension_properties",
    "minimal_extension",
]
