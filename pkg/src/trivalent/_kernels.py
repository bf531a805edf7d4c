"""Select the compiled kernels when they are built, else the pure-Python ones."""

try:
    from ._speedups import bfs_farthest, center, encode, parse_tree, tuple_names

    BACKEND = "cython"
except ImportError:  # extension not compiled
    from ._purepy import bfs_farthest, center, encode, parse_tree, tuple_names

    BACKEND = "python"

__all__ = ["BACKEND", "bfs_farthest", "center", "encode", "parse_tree", "tuple_names"]
