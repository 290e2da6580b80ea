"""Hardness reductions, exact oracles and simple algorithms for k-balanced partitioning."""

from .core import (CutReport, GeneralGraph, GridGraph, InputError, Partition, TooLargeError,
                   TreeGraph, cut_size, is_balanced, is_solid, minority_count)
from .reductions import (ReductionBundle, ReductionParams, build_general_reduction,
                         build_grid_reduction, build_tree_reduction, reduce,
                         solve_count_grid_fptas, solve_count_grid_perfect, solve_count_tree)
from .tpart import ThreePartInstance, TripleSolution, generate, solve_exact, validate

__version__ = "0.1.0"
