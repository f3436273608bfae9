"""
CLI module for oa-core command-line tools.
"""

from .main import cli

__all__ = ["cli"]
