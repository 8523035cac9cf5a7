"""Decide, build, sample and enumerate simple digraphs with prescribed in/out degrees."""

from .core import (
    BDSError,
    BiDegreeSequence,
    DegreePair,
    DiGraph,
    Ordering,
    OutNeighborhood,
    a_reduce,
    bds_of,
    is_left_of,
    normal_order,
    reduce_pivot,
    validate,
)
from .enumeration import BranchState, count_realizations, enumerate_all, feasible_extension
from .realize import (
    RealizeReport,
    RestrictedInstance,
    f_normal_order,
    f_prefix,
    is_bigraphical,
    is_feasible_restricted,
    is_graphical_undirected,
    realize_greedy,
)
from .sampler import ChainConfig, ChainState, empirical_tv, propose, run_chain, step
from .swaps import (
    Swap,
    SwapSequence,
    apply_swap,
    canonicalize,
    inverse,
    shift_left,
    shift_one,
    swap_path,
    verify_path,
)

__version__ = "0.1.0"
