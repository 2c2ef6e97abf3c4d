"""Partitions of the complete twisted graph T_2n into plane spanning trees."""
from .core import (
    CrossMatrix,
    Edge,
    InvalidPartition,
    Partition,
    canonicalize,
    center_edge,
    cross,
    crossing_matrix,
    is_balanced_double_star,
    is_plane,
    is_spanning_tree,
    validate_partition,
)
from .enumeration import (
    WorkLimitExceeded,
    count_closed_form,
    count_extensions,
    count_recursive,
    extend,
    filter_isomorphic,
    filter_paths,
    oracle_enumerate,
    structured_count,
    structured_enumerate,
)
from .isomorphic import double_star_A, find_k, iso_partition, trees_isomorphic
from .laws import restrict_partition, run_suite

__version__ = "0.1.0"
