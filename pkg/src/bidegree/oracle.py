"""Brute-force ground truth over all simple labeled digraphs on a few vertices.

Graphs on ``0..n-1`` are encoded as ``n(n-1)``-bit integers, bit ``j`` set
iff the ``j``-th ordered pair of :func:`pair_order` is an arc.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import BDSError, BiDegreeSequence, DiGraph
from .realize import RestrictedInstance

HARD_CAP = 6
# largest n whose full degree table is materialised (2**20 rows)
CATALOG_MAX = 5


class BudgetExceeded(BDSError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 5

    def __post_init__(self):
        if self.max_n > HARD_CAP:
            raise BudgetExceeded(f"max_n={self.max_n} exceeds the hard cap {HARD_CAP}")

    def check(self, n: int) -> None:
        if n > self.max_n:
            raise BudgetExceeded(f"n={n} exceeds budget max_n={self.max_n}")


DEFAULT_BUDGET = OracleBudget()


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[tuple[int, int], ...]:
    """Row-major ordered pairs ``(u, v)``, ``u != v``."""
    return tuple((u, v) for u in range(n) for v in range(n) if u != v)


def decode(mask: int, n: int) -> DiGraph:
    pairs = pair_order(n)
    return DiGraph(frozenset(pairs[j] for j in range(len(pairs)) if mask >> j & 1), n)


def encode(g: DiGraph, n: int) -> int:
    index = {p: j for j, p in enumerate(pair_order(n))}
    return sum(1 << index[a] for a in g.arcs)


def all_digraphs(n: int, budget: OracleBudget = DEFAULT_BUDGET) -> Iterator[DiGraph]:
    """Every simple digraph on ``0..n-1``, in increasing bitmask order."""
    budget.check(n)
    for mask in range(1 << (n * (n - 1))):
        yield decode(mask, n)


@lru_cache(maxsize=None)
def degree_table(n: int) -> np.ndarray:
    """``(2**(n(n-1)), 2n)`` array: out-degrees of 0..n-1 then in-degrees, per bitmask."""
    if n > CATALOG_MAX:
        raise BudgetExceeded(f"degree table for n={n} is too large; cap is {CATALOG_MAX}")
    pairs = pair_order(n)
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    table = np.zeros((masks.size, 2 * n), dtype=np.int8)
    for j, (u, v) in enumerate(pairs):
        bit = ((masks >> j) & 1).astype(np.int8)
        table[:, u] += bit
        table[:, n + v] += bit
    table.flags.writeable = False
    return table


@lru_cache(maxsize=None)
def catalog(n: int) -> dict[tuple[int, ...], np.ndarray]:
    """Bitmasks grouped by positional degree tuple ``(out_0, .., out_{n-1}, in_0, .., in_{n-1})``."""
    table = degree_table(n)
    if n == 0:
        return {(): np.zeros(1, dtype=np.int64)}
    base = int(table.max()) + 1
    keys = np.zeros(table.shape[0], dtype=np.int64)
    for c in range(table.shape[1]):
        keys = keys * base + table[:, c]
    order = np.argsort(keys, kind="stable")
    sorted_keys = keys[order]
    starts = np.flatnonzero(np.r_[True, sorted_keys[1:] != sorted_keys[:-1]])
    ends = np.r_[starts[1:], sorted_keys.size]
    out = {}
    for s, e in zip(starts, ends):
        out[tuple(int(x) for x in table[order[s]])] = order[s:e]
    return out


def _labels(bds: BiDegreeSequence, n: int | None, budget: OracleBudget) -> list[int]:
    labels = bds.ids
    if n is not None and n < len(labels):
        raise BDSError(f"sequence has {len(labels)} active vertices, more than n={n}")
    budget.check(len(labels) if n is None else n)
    return labels


def oracle_masks(bds: BiDegreeSequence, n: int | None = None, budget: OracleBudget = DEFAULT_BUDGET) -> np.ndarray:
    """Bitmasks (over the active vertices, relabeled 0..k-1 by id order) realizing ``bds``."""
    labels = _labels(bds, n, budget)
    k = len(labels)
    degs = bds.as_dict()
    key = tuple(degs[v][0] for v in labels) + tuple(degs[v][1] for v in labels)
    if k <= CATALOG_MAX:
        return catalog(k).get(key, np.zeros(0, dtype=np.int64))
    return _scan(k, key)


def _scan(n: int, key: tuple[int, ...], chunk: int = 1 << 22) -> np.ndarray:
    """Chunked filter for sizes whose full degree table would not fit in memory."""
    pairs = pair_order(n)
    target = np.asarray(key, dtype=np.int8)
    found = []
    for lo in range(0, 1 << len(pairs), chunk):
        masks = np.arange(lo, min(lo + chunk, 1 << len(pairs)), dtype=np.int64)
        degs = np.zeros((masks.size, 2 * n), dtype=np.int8)
        for j, (u, v) in enumerate(pairs):
            bit = ((masks >> j) & 1).astype(np.int8)
            degs[:, u] += bit
            degs[:, n + v] += bit
        found.append(masks[(degs == target).all(axis=1)])
    return np.concatenate(found)


def oracle_realizations(
    bds: BiDegreeSequence, n: int | None = None, budget: OracleBudget = DEFAULT_BUDGET
) -> list[DiGraph]:
    """Every labeled realization of ``bds`` found by exhaustive filtering."""
    labels = _labels(bds, n, budget)
    k = len(labels)
    out = []
    for mask in oracle_masks(bds, n, budget):
        g = decode(int(mask), k)
        out.append(DiGraph(frozenset((labels[u], labels[v]) for u, v in g.arcs), n or k))
    return out


def oracle_restricted(inst: RestrictedInstance, n: int | None = None, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Does some realization keep the pivot's out-arcs away from the forbidden set?"""
    for g in oracle_realizations(inst.bds, n, budget):
        if not (g.out_neighbors(inst.pivot) & inst.forbidden):
            return True
    return False


def oracle_count(bds: BiDegreeSequence, n: int | None = None, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return int(oracle_masks(bds, n, budget).size)


def greedy_misses(n: int, budget: OracleBudget = DEFAULT_BUDGET):
    """Yield ``(bds, graph)`` where ``graph`` realizes ``bds`` but no greedy run can output it.

    "No greedy run" covers every pivot choice and every tie order among equal
    degree pairs, so both shipped pivot strategies are included.
    """
    from .realize import greedy_reachable

    budget.check(n)
    for key, masks in sorted(catalog(n).items()):
        if masks.size < 2:
            continue
        bds = BiDegreeSequence.from_mapping({v: (key[v], key[n + v]) for v in range(n)})
        reachable = greedy_reachable(bds)
        if len(reachable) == masks.size:
            continue
        for mask in masks:
            g = decode(int(mask), n)
            if g.key() not in reachable:
                yield bds, g
