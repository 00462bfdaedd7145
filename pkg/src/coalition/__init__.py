"""Exact-computation toolkit for coalition partitions in graphs.

Verify coalition partitions with machine-checkable certificates, compute
coalition numbers by pruned exhaustive search, scan cubic-graph catalogs,
and grow the order-16 extremal graphs into infinite families.
"""

from .domination import NeighborhoodTable, build_table, dominated_by, is_dominating
from .engine import (
    CoalitionCertificate,
    DominatingSingleton,
    Partner,
    Rejection,
    SearchOutcome,
    SolveResult,
    brute_force_coalition_number,
    coalition_number,
    exists_partition_of_order,
    is_coalition,
    upper_bound,
    verify_partition,
)
from .graph6 import Graph6Error, encode_graph6, parse_graph6, read_graph6_file
from .graphs import Graph, GraphError, VertexSet, from_edges
from .partitions import Partition, PartitionError, format_partition, parse_partition

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "from_edges",
    "parse_graph6",
    "encode_graph6",
    "read_graph6_file",
    "Graph6Error",
    "NeighborhoodTable",
    "build_table",
    "dominated_by",
    "is_dominating",
    "Partition",
    "PartitionError",
    "parse_partition",
    "format_partition",
    "CoalitionCertificate",
    "DominatingSingleton",
    "Partner",
    "Rejection",
    "SearchOutcome",
    "SolveResult",
    "is_coalition",
    "verify_partition",
    "upper_bound",
    "exists_partition_of_order",
    "coalition_number",
    "brute_force_coalition_number",
    "__version__",
]
