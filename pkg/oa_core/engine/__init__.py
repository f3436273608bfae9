"""
Calculus engine: configuration and the command coordinator.
"""

from .config import BoundSearchConfig, CalculusConfig, CapsConfig, GridConfig, SamplingConfig
from .core import COMMANDS, CalculusEngine, CommandResult
from .report import partition_label, plain, show

__all__ = [
    "BoundSearchConfig",
    "CalculusConfig",
    "CapsConfig",
    "GridConfig",
    "SamplingConfig",
    "COMMANDS",
    "CalculusEngine",
    "CommandResult",
    "partition_label",
    "plain",
    "show",
]
