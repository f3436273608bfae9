"""
Atomic operators: atomicity checks, pointwise lattice operations and the
band projection onto the atomic band.
"""

from .atomicity import (
    AtomicConsequencesReport,
    AtomicityMode,
    AtomicityReport,
    AtomicityWitness,
    IdealPropertyReport,
    atomic_consequences_check,
    ideal_property_check,
    is_atomic,
    subordinate_hom,
)
from .lattice_ops import pointwise_lattice_op
from .band import (
    DEFAULT_PARTITION_CAP,
    BandMode,
    BandPropertiesReport,
    PartitionRow,
    PartitionTable,
    atomic_complement,
    band_projection,
    band_projection_properties,
    masked_operator,
    partition_table,
    partition_value,
)

__all__ = [
    "AtomicConsequencesReport",
    "AtomicityMode",
    "AtomicityReport",
    "AtomicityWitness",
    "IdealPropertyReport",
    "atomic_consequences_check",
    "ideal_property_check",
    "is_atomic",
    "subordinate_hom",
    "pointwise_lattice_op",
    "DEFAULT_PARTITION_CAP",
    "BandMode",
    "BandPropertiesReport",
    "PartitionRow",
    "PartitionTable",
    "atomic_complement",
    "band_projection",
    "band_projection_properties",
    "masked_operator",
    "partition_table",
    "partition_value",
]
