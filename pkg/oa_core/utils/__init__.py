"""
Shared helpers: rationals, YAML IO and set partitions.

``oa_core.utils.sampling`` depends on the lattice and kernel packages and is
imported directly by its users.
"""

from .rationals import format_rational, to_rational
from .partitions import bell_number, set_partitions
from .yaml_parser import YamlParser

__all__ = ["format_rational", "to_rational", "bell_number", "set_partitions", "YamlParser"]
