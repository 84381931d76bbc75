"""Independent coalition partitions of small graphs."""

from .coalition import (
    NO_PARTITION,
    ICResult,
    Partition,
    PartitionError,
    coalition_number,
    coalition_partition,
    forms_ic,
    ic_number,
    iter_ic_partitions,
    partner_counts,
    verify_c_partition,
    verify_ic_partition,
)
from .families import FamilySpec, classify, formula_ic, generate, parse_family, witness_partition
from .graph import CapacityError, Graph, are_isomorphic, build
from .graph6 import Graph6Error, encode_graph6, parse_graph6, read_stream
from .invariants import (
    chromatic_number,
    idomatic_number,
    independence_number,
    independent_domination_number,
    maximal_independent_sets,
)

__all__ = [
    "NO_PARTITION", "ICResult", "Partition", "PartitionError", "coalition_number",
    "coalition_partition", "forms_ic", "ic_number", "iter_ic_partitions", "partner_counts",
    "verify_c_partition", "verify_ic_partition", "FamilySpec", "classify", "formula_ic",
    "generate", "parse_family", "witness_partition", "CapacityError", "Graph",
    "are_isomorphic", "build", "Graph6Error", "encode_graph6", "parse_graph6", "read_stream",
    "chromatic_number", "idomatic_number", "independence_number",
    "independent_domination_number", "maximal_independent_sets",
]
