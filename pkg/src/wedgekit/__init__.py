"""Partitions, symmetric-group characters, the infinite wedge and random partitions."""

from .characters import (
    CharacterTable,
    character_table,
    dim_coords,
    dim_determinant,
    dim_frobenius,
    dim_hook,
    mn_character,
    skew_dim,
)
from .fock import VertexOpSpec, WedgeVector, apply_alpha, apply_vertex, basis
from .limits import PLANCHEREL, UNIFORM, LimitShape, moment_scaling_check, sup_distance
from .measures import MeasureSpec, sample, sample_batch, shifted_power
from .partitions import Partition, hook_length, hook_product, p_core_quotient
from .qseries import QSeries, UQSeries
from .variational import hook_correction_c, hook_integral, typical_dimension_constant

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "LimitShape",
    "MeasureSpec",
    "PLANCHEREL",
    "Partition",
    "QSeries",
    "UNIFORM",
    "UQSeries",
    "VertexOpSpec",
    "WedgeVector",
    "apply_alpha",
    "apply_vertex",
    "basis",
    "character_table",
    "dim_coords",
    "dim_determinant",
    "dim_frobenius",
    "dim_hook",
    "hook_correction_c",
    "hook_integral",
    "hook_length",
    "hook_product",
    "mn_character",
    "moment_scaling_check",
    "p_core_quotient",
    "sample",
    "sample_batch",
    "shifted_power",
    "skew_dim",
    "sup_distance",
    "typical_dimension_constant",
]
