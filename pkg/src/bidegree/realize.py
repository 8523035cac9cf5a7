"""Graphicality tests and greedy realization (directed Havel-Hakimi)."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Literal

from .core import (
    BDSError,
    BiDegreeSequence,
    DiGraph,
    Ordering,
    OutNeighborhood,
    UnknownPivot,
    a_reduce,
    normal_sequence,
    peel,
)

PivotStrategy = Literal["max-out", "min-index"]
STRATEGIES: tuple[str, ...] = ("max-out", "min-index")


class NotEnoughAllowedVertices(BDSError):
    pass


def choose_pivot(degrees: Mapping[int, tuple[int, int]], strategy: str = "max-out") -> int | None:
    """Pick the next vertex whose out-neighborhood gets fixed.

    ``max-out``: largest out-degree, then largest in-degree, then smallest id.
    ``min-index``: smallest id with positive out-degree.
    Returns ``None`` if every out-degree is zero.
    """
    live = [v for v, (o, _) in degrees.items() if o > 0]
    if not live:
        return None
    if strategy == "max-out":
        return min(live, key=lambda v: (-degrees[v][0], -degrees[v][1], v))
    if strategy == "min-index":
        return min(live)
    raise ValueError(f"unknown pivot strategy {strategy!r}")


def quick_reject(degrees: Mapping[int, tuple[int, int]]) -> bool:
    """Necessary conditions: equal degree sums and no degree above n - 1."""
    n = len(degrees)
    if sum(o for o, _ in degrees.values()) != sum(i for _, i in degrees.values()):
        return True
    return any(o > n - 1 or i > n - 1 for o, i in degrees.values())


def is_graphical_undirected(d: Iterable[int]) -> bool:
    """Classic Havel-Hakimi test for simple undirected graphs."""
    d = list(d)
    if any(x < 0 for x in d):
        return False
    seq = sorted((x for x in d if x > 0), reverse=True)
    if sum(seq) % 2:
        return False
    while seq:
        first = seq.pop(0)
        if first > len(seq):
            return False
        for k in range(first):
            seq[k] -= 1
            if seq[k] < 0:
                return False
        seq = sorted((x for x in seq if x > 0), reverse=True)
    return True


def _greedy(degrees: dict[int, tuple[int, int]], strategy: str):
    """Run the reduction; yields ``(pivot, heads)`` per round, ``None`` on failure."""
    if quick_reject(degrees):
        yield None
        return
    while degrees:
        pivot = choose_pivot(degrees, strategy)
        if pivot is None:
            yield None
            return
        d = degrees[pivot][0]
        if d > len(degrees) - 1:
            yield None
            return
        heads = normal_sequence(degrees, pivot)[:d]
        degrees = peel(degrees, pivot, heads)
        if degrees is None:
            yield None
            return
        yield pivot, heads


def is_bigraphical(bds: BiDegreeSequence, strategy: str = "max-out") -> bool:
    return all(step is not None for step in _greedy(bds.as_dict(), strategy))


def is_bigraphical_degrees(degrees: Mapping[int, tuple[int, int]], strategy: str = "max-out") -> bool:
    """Same as :func:`is_bigraphical` on a raw ``{id: (out, in)}`` dict."""
    degs = {v: d for v, d in degrees.items() if d != (0, 0)}
    return all(step is not None for step in _greedy(degs, strategy))


@dataclass(frozen=True)
class RealizeReport:
    result: DiGraph | None
    failed_step: int | None = None

    def __post_init__(self):
        if (self.result is None) != (self.failed_step is not None):
            raise ValueError("failed_step must be set exactly when result is infeasible")

    @property
    def ok(self) -> bool:
        return self.result is not None


def realize_greedy(bds: BiDegreeSequence, strategy: str = "max-out") -> RealizeReport:
    """Build a realization by repeatedly packing the pivot's arcs leftmost.

    Rounds are numbered from 0; the quick-reject pre-check counts as round 0.
    """
    arcs = []
    for rnd, step in enumerate(_greedy(bds.as_dict(), strategy)):
        if step is None:
            return RealizeReport(None, rnd)
        pivot, heads = step
        arcs.extend((pivot, h) for h in heads)
    return RealizeReport(DiGraph(frozenset(arcs), len(bds)))


def greedy_reachable(bds: BiDegreeSequence) -> set[tuple]:
    """Every graph the greedy procedure can output under any pivot choice and tie order.

    A round may use any pivot with positive out-degree and any normal order,
    so the chosen heads are the top in-/out-degree classes plus any subset of
    the boundary class of the right size. Returns sorted arc tuples.
    """
    from itertools import combinations

    memo: dict[tuple, set[tuple]] = {}

    def rec(degs: dict[int, tuple[int, int]]) -> set[tuple]:
        key = tuple(sorted(degs.items()))
        if key in memo:
            return memo[key]
        found: set[tuple] = set()
        if not degs:
            found.add(())
        elif not quick_reject(degs):
            for pivot in sorted(v for v, (o, _) in degs.items() if o > 0):
                d = degs[pivot][0]
                rest = normal_sequence(degs, pivot)
                if d > len(rest):
                    continue
                boundary = degs[rest[d - 1]]
                fixed = [v for v in rest[:d] if degs[v] != boundary]
                klass = [v for v in rest if degs[v] == boundary]
                for extra in combinations(klass, d - len(fixed)):
                    heads = fixed + list(extra)
                    nxt = peel(degs, pivot, heads)
                    if nxt is None:
                        continue
                    for tail in rec(nxt):
                        found.add(tuple(sorted(tail + tuple((pivot, h) for h in heads))))
        memo[key] = found
        return found

    return rec(bds.as_dict())


@dataclass(frozen=True)
class RestrictedInstance:
    """A sequence plus a pivot whose out-neighbors must avoid ``forbidden``.

    Forbidden ids that are not active in ``bds`` are dropped: such vertices
    can never receive an arc anyway.
    """

    bds: BiDegreeSequence
    pivot: int
    forbidden: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.pivot not in self.bds:
            raise UnknownPivot(f"pivot {self.pivot} not in sequence")
        forbidden = frozenset(self.forbidden)
        if self.pivot in forbidden:
            raise BDSError(f"pivot {self.pivot} is in the forbidden set")
        active = set(self.bds.ids)
        object.__setattr__(self, "forbidden", frozenset(f for f in forbidden if f in active))

    @property
    def n(self) -> int:
        return len(self.bds)

    @property
    def out_deg(self) -> int:
        return self.bds.pair(self.pivot).out_deg

    @property
    def allowed_count(self) -> int:
        return self.n - 1 - len(self.forbidden)


def f_normal_order(inst: RestrictedInstance) -> Ordering:
    """Allowed vertices in normal order, then the forbidden block by id, then the pivot."""
    degs = inst.bds.as_dict()
    allowed = normal_sequence(degs, inst.pivot, exclude=inst.forbidden)
    kind = "F-normal" if inst.forbidden else "normal"
    return Ordering(tuple(allowed) + tuple(sorted(inst.forbidden)) + (inst.pivot,), kind)


def f_prefix(inst: RestrictedInstance, k: int) -> OutNeighborhood:
    """The ``k`` leftmost allowed vertices as a candidate out-neighborhood of the pivot."""
    if k > inst.allowed_count:
        raise NotEnoughAllowedVertices(f"need {k} allowed vertices, only {inst.allowed_count} exist")
    ordering = f_normal_order(inst)
    return OutNeighborhood.of(ordering, inst.pivot, ordering.order[:k])


def is_feasible_restricted(inst: RestrictedInstance, strategy: str = "max-out") -> bool:
    """Is there a realization where the pivot sends no arc into ``forbidden``?"""
    d = inst.out_deg
    if len(inst.forbidden) + 1 + d > inst.n:
        return False
    pon = f_prefix(inst, d)
    degs = inst.bds.as_dict()
    if any(degs[m][1] < 1 for m in pon.members):
        return False
    return is_bigraphical(a_reduce(inst.bds, pon), strategy)


def restricted_feasible_degrees(
    degrees: Mapping[int, tuple[int, int]], pivot: int, forbidden: Iterable[int], strategy: str = "max-out"
) -> bool:
    """:func:`is_feasible_restricted` on a raw degree dict, skipping object construction."""
    forbidden = {f for f in forbidden if f in degrees and f != pivot}
    d = degrees[pivot][0]
    if len(forbidden) + 1 + d > len(degrees):
        return False
    heads = normal_sequence(degrees, pivot, exclude=forbidden)[:d]
    reduced = peel(degrees, pivot, heads)
    return reduced is not None and is_bigraphical_degrees(reduced, strategy)

