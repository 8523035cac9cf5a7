"""Exhaustive generation of every labeled realization of a bi-degree sequence.

Pivots are processed in ascending id. For the current pivot each candidate
head (ascending id) is either included or excluded; after every decision
the restricted feasibility test decides whether the branch can still be
completed, so no branch is ever explored in vain.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from itertools import islice

from .core import Arc, BiDegreeSequence, DiGraph, peel
from .realize import is_bigraphical_degrees, restricted_feasible_degrees


@dataclass(frozen=True)
class BranchState:
    reduced_bds: BiDegreeSequence
    pivot: int
    chosen: frozenset[int] = field(default_factory=frozenset)
    forbidden: frozenset[int] = field(default_factory=frozenset)
    frozen_arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.chosen & self.forbidden:
            raise ValueError("a vertex cannot be both chosen and forbidden")
        if len(self.chosen) > self.reduced_bds.pair(self.pivot).out_deg:
            raise ValueError("more chosen heads than the pivot's out-degree")


def _extension_ok(degrees: Mapping[int, tuple[int, int]], pivot: int, chosen, forbidden) -> bool:
    partial = peel(degrees, pivot, chosen)
    if partial is None:
        return False
    if pivot not in partial or partial[pivot][0] == 0:
        return is_bigraphical_degrees(partial)
    # already-chosen heads cannot be picked a second time
    return restricted_feasible_degrees(partial, pivot, set(forbidden) | set(chosen))


def feasible_extension(bs: BranchState) -> bool:
    """Can the pivot's out-neighborhood be completed to contain ``chosen`` and avoid ``forbidden``?"""
    return _extension_ok(bs.reduced_bds.as_dict(), bs.pivot, bs.chosen, bs.forbidden)


def _search(degrees: dict[int, tuple[int, int]], frozen: list[Arc], prune: bool) -> Iterator[list[Arc]]:
    if not degrees:
        yield frozen
        return
    live = [v for v, (o, _) in degrees.items() if o > 0]
    if not live:
        return
    pivot = min(live)
    need = degrees[pivot][0]
    candidates = sorted(v for v in degrees if v != pivot)

    def branch(j: int, chosen: list[int], forbidden: list[int]):
        if len(chosen) == need:
            rest = peel(degrees, pivot, chosen)
            if rest is not None:
                yield from _search(rest, frozen + [(pivot, h) for h in chosen], prune)
            return
        if need - len(chosen) > len(candidates) - j:
            return
        c = candidates[j]
        for include in (True, False):
            nxt_c = chosen + [c] if include else chosen
            nxt_f = forbidden if include else forbidden + [c]
            if include and degrees[c][1] == 0:
                continue
            if prune and not _extension_ok(degrees, pivot, nxt_c, nxt_f):
                continue
            yield from branch(j + 1, nxt_c, nxt_f)

    yield from branch(0, [], [])


def enumerate_all(bds: BiDegreeSequence, limit: int | None = None, prune: bool = True) -> Iterator[DiGraph]:
    """Yield every realization of ``bds`` exactly once, in a fixed order.

    ``prune=False`` disables the feasibility cut (reference mode, small inputs only).
    """
    n = len(bds)
    gen = (DiGraph(frozenset(arcs), n) for arcs in _search(bds.as_dict(), [], prune))
    return islice(gen, limit) if limit is not None else gen


def count_realizations(bds: BiDegreeSequence) -> int:
    return sum(1 for _ in enumerate_all(bds))
