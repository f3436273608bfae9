"""
Conversion of calculus objects into plain report data.

Reports contain only strings, integers, booleans, lists and string-keyed
mappings so that YAML and JSON output is byte-stable.
"""

import dataclasses
from enum import Enum
from fractions import Fraction
from typing import Any

from ..atomic import AtomicityWitness, PartitionRow
from ..lattice import Element, Space
from ..operators import KernelOperator
from ..projections import BooleanHom, OrderProjection
from ..superposition import SuperpositionKernel
from ..utils.rationals import format_rational


def plain(value: Any) -> Any:
    """Recursively turn a value into report data."""
    if isinstance(value, Enum):
        return value.value
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Element):
        return value.to_list()
    if isinstance(value, Space):
        return [str(p) for p in value.points]
    if isinstance(value, KernelOperator):
        return plain(value.to_table())
    if isinstance(value, SuperpositionKernel):
        return plain(value.to_table())
    if isinstance(value, BooleanHom):
        return plain(value.as_mapping())
    if isinstance(value, OrderProjection):
        return [str(p) for p in value.sorted_carrier()]
    if isinstance(value, AtomicityWitness):
        return plain(value.to_dict())
    if isinstance(value, PartitionRow):
        return {
            "element": plain(value.element),
            "closed_form": plain(value.closed_form),
            "minimum": plain(value.minimum),
            "minimizers": [partition_label(p) for p in value.minimizers],
            "agrees": value.agrees,
            "values": {partition_label(p): plain(v) for p, v in value.values},
        }
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=str)
        return items
    if dataclasses.is_dataclass(value):
        return {f.name: plain(getattr(value, f.name)) for f in dataclasses.fields(value)}
    return str(value)


def partition_label(partition) -> str:
    """{a,b}|{c} style label of a set partition."""
    return "|".join("{" + ",".join(str(p) for p in block) + "}" for block in partition)


def show(value: Any) -> str:
    """Short text form of an element or rational for summaries."""
    if isinstance(value, Element):
        return "[" + ", ".join(value.to_list()) + "]"
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)
