"""Swap-based Markov chain over the realizations of a fixed bi-degree sequence.

Moves are drawn as ordered tuples of distinct arcs, uniformly over the
current arc list. Two arcs propose a pair swap; three arcs propose a
triple rewiring when they form a directed path a>b>c>d (or a triangle
when d = a). Proposals that don't match or would break simplicity are
rejected and the chain stays put. The arc count never changes, so every
move and its inverse are drawn with the same probability and the uniform
distribution is stationary without a Hastings correction.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .core import Arc, BDSError, DiGraph
from .swaps import Swap


class SampleOutsideSupport(BDSError):
    pass


@dataclass
class ChainConfig:
    steps: int
    seed: int = 0
    pair_move_probability: float = 0.5
    thinning: int = 1

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError("steps must be non-negative")
        if self.thinning < 1:
            raise ValueError("thinning must be positive")
        if not 0.0 <= self.pair_move_probability <= 1.0:
            raise ValueError("pair_move_probability must lie in [0, 1]")


@dataclass
class ChainState:
    """Mutable chain state; owned by exactly one chain."""

    arcs: list[Arc]
    rng: random.Random
    pair_move_probability: float = 0.5
    n: int = 0
    step_count: int = 0
    accept_count: int = 0
    arc_set: set[Arc] = field(init=False)

    def __post_init__(self):
        self.arc_set = set(self.arcs)

    @classmethod
    def start(cls, g: DiGraph, seed: int, pair_move_probability: float = 0.5) -> ChainState:
        return cls(g.sorted_arcs(), random.Random(seed), pair_move_probability, g.n)

    @property
    def current(self) -> DiGraph:
        return DiGraph(frozenset(self.arcs), self.n)


def match_pair(x: Arc, y: Arc, arcs: set[Arc]) -> Swap | None:
    (a, b), (c, d) = x, y
    if a == d or c == b or (a, d) in arcs or (c, b) in arcs:
        return None
    return Swap.pair(a, b, c, d)


def match_triple(x: Arc, y: Arc, z: Arc, arcs: set[Arc]) -> Swap | None:
    (a, b), (b2, c), (c2, d) = x, y, z
    if b != b2 or c != c2 or a == c:
        return None
    if d == a:
        s = Swap.triangle(a, b, c)
    elif d == b:
        return None
    else:
        s = Swap.triple_path(a, b, c, d)
    if any(e in arcs for e in s.added):
        return None
    return s


def propose(state: ChainState) -> Swap | None:
    """Draw one candidate move; ``None`` means reject."""
    m = len(state.arcs)
    rng = state.rng
    if rng.random() < state.pair_move_probability:
        if m < 2:
            return None
        i, j = rng.sample(range(m), 2)
        return match_pair(state.arcs[i], state.arcs[j], state.arc_set)
    if m < 3:
        return None
    i, j, k = rng.sample(range(m), 3)
    return match_triple(state.arcs[i], state.arcs[j], state.arcs[k], state.arc_set)


def step(state: ChainState) -> ChainState:
    """Advance one step in place (lazy on rejection) and return the state."""
    s = propose(state)
    state.step_count += 1
    if s is not None:
        removed = s.removed
        state.arc_set.difference_update(removed)
        state.arc_set.update(s.added)
        # keep slot positions stable so the arc list stays deterministic
        slots = sorted(state.arcs.index(a) for a in removed)
        for slot, new in zip(slots, sorted(s.added)):
            state.arcs[slot] = new
        state.accept_count += 1
    return state


def run_chain(g0: DiGraph, cfg: ChainConfig) -> list[DiGraph]:
    """Run ``cfg.steps`` steps from ``g0`` and keep every ``cfg.thinning``-th state."""
    state = ChainState.start(g0, cfg.seed, cfg.pair_move_probability)
    samples = []
    for t in range(1, cfg.steps + 1):
        step(state)
        if t % cfg.thinning == 0:
            samples.append(state.current)
    return samples


def empirical_tv(samples: list[DiGraph], realization_set: list[DiGraph]) -> float:
    """Total-variation distance between sample frequencies and uniform on ``realization_set``."""
    if not realization_set:
        raise ValueError("realization_set is empty")
    support = {g.key() for g in realization_set}
    counts = Counter(g.key() for g in samples)
    outside = set(counts) - support
    if outside:
        raise SampleOutsideSupport(f"{len(outside)} sampled graphs are not in the realization set")
    total = len(samples)
    if total == 0:
        raise ValueError("no samples")
    u = 1.0 / len(support)
    return 0.5 * sum(abs(counts.get(k, 0) / total - u) for k in support)
