"""Enumeration and canonical strings for trivalent 2-stratifold graphs."""

from ._kernels import BACKEND
from .canonical import (
    ahu_modified,
    center,
    decode,
    eccentricity,
    encode,
    farthest_path,
    symmetry_classes,
)
from .catalog import make_tag, read_catalog, stats_table, to_dot, write_catalog
from .generator import (
    EnumerationResult,
    GraphStore,
    Mode,
    apply_O1,
    apply_O1star,
    apply_O2,
    enumerate_graphs,
    inverse_witness,
)
from .graph import (
    BLACK,
    WHITE,
    Color,
    TrivalentGraph,
    b12,
    b111,
    census,
    is_isomorphic_bruteforce,
    relabel,
    validate,
)

__version__ = "0.1.0"
