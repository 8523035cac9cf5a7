"""Degree-preserving rewirings and explicit swap paths between realizations.

A swap is stored as its kind plus the vertex tuple that names it:

* ``pair (a, b, c, d)``:          a>b, c>d       becomes a>d, c>b
* ``triple-path (a, b, c, d)``:   a>b, b>c, c>d  becomes a>c, c>b, b>d
* ``triple-triangle (a, b, c)``:  a>b, b>c, c>a  becomes a>c, c>b, b>a
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Literal

from .core import Arc, BDSError, DiGraph, Ordering, OutNeighborhood, degree_dict, is_left_of, normal_sequence
from .realize import choose_pivot

Kind = Literal["pair", "triple-path", "triple-triangle"]

# serialization tokens
KIND_TOKENS = {"pair": "pair", "triple-path": "triple4", "triple-triangle": "triple3"}
TOKEN_KINDS = {v: k for k, v in KIND_TOKENS.items()}


class SwapError(BDSError):
    pass


class SwapNotApplicable(SwapError):
    pass


class PrecedenceViolated(SwapError):
    pass


class NoCaseApplies(SwapError):
    pass


class NotLeftOf(SwapError):
    pass


class DegreeSequenceMismatch(SwapError):
    pass


@dataclass(frozen=True)
class Swap:
    kind: Kind
    verts: tuple[int, ...]

    def __post_init__(self):
        need = 3 if self.kind == "triple-triangle" else 4
        if self.kind not in KIND_TOKENS:
            raise SwapError(f"unknown swap kind {self.kind!r}")
        if len(self.verts) != need:
            raise SwapError(f"{self.kind} needs {need} vertices, got {self.verts}")
        if self.kind != "pair" and len(set(self.verts)) != need:
            raise SwapError(f"{self.kind} vertices must be distinct: {self.verts}")
        if any(u == v for u, v in self.added) or any(u == v for u, v in self.removed):
            raise SwapNotApplicable(f"{self.kind} {self.verts} involves a loop")
        if len(set(self.added)) != len(self.added) or len(set(self.removed)) != len(self.removed):
            raise SwapNotApplicable(f"{self.kind} {self.verts} repeats an arc")

    @classmethod
    def pair(cls, a: int, b: int, c: int, d: int) -> Swap:
        return cls("pair", (a, b, c, d))

    @classmethod
    def triple_path(cls, a: int, b: int, c: int, d: int) -> Swap:
        return cls("triple-path", (a, b, c, d))

    @classmethod
    def triangle(cls, a: int, b: int, c: int) -> Swap:
        return cls("triple-triangle", (a, b, c))

    @property
    def removed(self) -> tuple[Arc, ...]:
        v = self.verts
        if self.kind == "pair":
            return ((v[0], v[1]), (v[2], v[3]))
        if self.kind == "triple-path":
            return ((v[0], v[1]), (v[1], v[2]), (v[2], v[3]))
        return ((v[0], v[1]), (v[1], v[2]), (v[2], v[0]))

    @property
    def added(self) -> tuple[Arc, ...]:
        v = self.verts
        if self.kind == "pair":
            return ((v[0], v[3]), (v[2], v[1]))
        if self.kind == "triple-path":
            return ((v[0], v[2]), (v[2], v[1]), (v[1], v[3]))
        return ((v[0], v[2]), (v[2], v[1]), (v[1], v[0]))

    def __str__(self) -> str:
        rem = ",".join(f"{u}>{v}" for u, v in self.removed)
        add = ",".join(f"{u}>{v}" for u, v in self.added)
        return f"{KIND_TOKENS[self.kind]} {rem} | {add}"


@dataclass(frozen=True)
class SwapSequence:
    steps: tuple[Swap, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: SwapSequence) -> SwapSequence:
        return SwapSequence(self.steps + tuple(other.steps))

    def inverted(self) -> SwapSequence:
        """Reverse order, each step inverted: undoes this sequence."""
        return SwapSequence(tuple(inverse(s) for s in reversed(self.steps)))

    def dumps(self) -> str:
        return "".join(f"{s}\n" for s in self.steps)


def parse_swap(line: str) -> Swap:
    """Inverse of ``str(swap)``; the vertex tuple is recovered from the removed arcs."""
    try:
        token, rest = line.strip().split(None, 1)
        rem_txt, add_txt = rest.split("|")
        kind = TOKEN_KINDS[token]
        removed = [tuple(int(x) for x in a.split(">")) for a in rem_txt.strip().split(",")]
    except (KeyError, ValueError) as exc:
        raise SwapError(f"cannot parse swap line {line!r}") from exc
    if kind == "pair":
        (a, b), (c, d) = removed
        s = Swap.pair(a, b, c, d)
    elif kind == "triple-path":
        (a, b), (_, c), (_, d) = removed
        s = Swap.triple_path(a, b, c, d)
    else:
        (a, b), (_, c), _ = removed
        s = Swap.triangle(a, b, c)
    if str(s) != " ".join(line.split()):
        raise SwapError(f"inconsistent swap line {line!r}")
    return s


def parse_swaps(text: str) -> SwapSequence:
    return SwapSequence(tuple(parse_swap(ln) for ln in text.splitlines() if ln.strip()))


def _apply_arcs(arcs: set[Arc], s: Swap) -> None:
    """In-place variant of :func:`apply_swap` on a mutable arc set."""
    for a in s.removed:
        if a not in arcs:
            raise SwapNotApplicable(f"{s}: arc {a[0]}>{a[1]} is absent")
    for a in s.added:
        if a in arcs:
            raise SwapNotApplicable(f"{s}: arc {a[0]}>{a[1]} already present")
    arcs.difference_update(s.removed)
    arcs.update(s.added)


def apply_swap(g: DiGraph, s: Swap) -> DiGraph:
    arcs = set(g.arcs)
    _apply_arcs(arcs, s)
    return DiGraph(frozenset(arcs), g.n)


def inverse(s: Swap) -> Swap:
    a, b, c, *rest = s.verts
    if s.kind == "pair":
        return Swap.pair(a, rest[0], c, b)
    if s.kind == "triple-path":
        return Swap.triple_path(a, c, b, rest[0])
    return Swap.triangle(a, c, b)


def _precedes(degs: Mapping[int, tuple[int, int]], i: int, k: int) -> bool:
    """True if ``i`` may replace ``k``: in-degree at least as big, out-degree breaks ties."""
    (oi, ii), (ok, ik) = degs.get(i, (0, 0)), degs.get(k, (0, 0))
    return ii > ik or (ii == ik and oi >= ok)


def _find_shift(arcs: set[Arc], vertices: Iterable[int], p: int, k: int, i: int) -> Swap:
    others = sorted(v for v in vertices if v not in (i, k, p))
    # (1) an in-neighbor of i that does not point at k
    for l in others:
        if (l, i) in arcs and (l, k) not in arcs:
            return Swap.pair(p, k, l, i)
    if (k, i) in arcs and (i, k) not in arcs:
        # (2) an out-neighbor of i that k does not point at
        for m in others:
            if (i, m) in arcs and (k, m) not in arcs:
                return Swap.triple_path(p, k, i, m)
        # (3) close the triangle through the pivot
        if (i, p) in arcs and (k, p) not in arcs:
            return Swap.triangle(p, k, i)
    raise NoCaseApplies(f"no swap moves pivot {p} from {k} to {i}")


def shift_one(g: DiGraph, pivot: int, leave: int, enter: int) -> tuple[Swap, DiGraph]:
    """Exchange out-neighbor ``leave`` of ``pivot`` for ``enter`` with a single swap.

    ``enter`` must precede ``leave`` (in-degree, then out-degree) in ``g``.
    """
    arcs = set(g.arcs)
    s = _shift_arcs(arcs, degree_dict(g), pivot, leave, enter)
    return s, DiGraph(frozenset(arcs), g.n)


def _shift_arcs(arcs: set[Arc], degs: Mapping[int, tuple[int, int]], p: int, k: int, i: int) -> Swap:
    if (p, k) not in arcs:
        raise SwapNotApplicable(f"{p}>{k} is not an arc")
    if (p, i) in arcs or i == p:
        raise SwapNotApplicable(f"{i} cannot enter the out-neighborhood of {p}")
    if not _precedes(degs, i, k):
        raise PrecedenceViolated(f"vertex {i} {degs.get(i)} does not precede {k} {degs.get(k)}")
    s = _find_shift(arcs, degs.keys(), p, k, i)
    _apply_arcs(arcs, s)
    return s


def left_shift_pairs(c: OutNeighborhood, a: OutNeighborhood, ordering: Ordering) -> list[tuple[int, int]]:
    """The order-respecting bijection from ``c - a`` onto ``a - c`` as (enter, leave) pairs."""
    if not is_left_of(c, a):
        raise NotLeftOf(f"{c.index_vector} is not to the left of {a.index_vector}")
    pos = ordering.positions()
    entering = sorted(c.members - a.members, key=pos.__getitem__)
    leaving = sorted(a.members - c.members, key=pos.__getitem__)
    return list(zip(entering, leaving))


def shift_left(
    g: DiGraph, pivot: int, target: OutNeighborhood, ordering: Ordering | None = None
) -> tuple[SwapSequence, DiGraph]:
    """Move the pivot's out-neighborhood onto ``target`` with one swap per changed member.

    ``ordering`` defaults to the normal order of ``g``'s own degrees.
    """
    degs = degree_dict(g)
    if ordering is None:
        ordering = Ordering(tuple(normal_sequence(degs, pivot)) + (pivot,), "normal")
    current = OutNeighborhood.of(ordering, pivot, g.out_neighbors(pivot))
    arcs = set(g.arcs)
    steps = [_shift_arcs(arcs, degs, pivot, k, i) for i, k in left_shift_pairs(target, current, ordering)]
    return SwapSequence(tuple(steps)), DiGraph(frozenset(arcs), g.n)


def canonicalize(g: DiGraph, strategy: str = "max-out") -> tuple[SwapSequence, DiGraph]:
    """Drive ``g`` to the greedy realization of its own degree sequence.

    Each round picks a pivot from the residual degrees, shifts its
    out-neighborhood onto the leftmost vertices of the normal order, then
    freezes those arcs. Swaps are checked against the residual graph only,
    so frozen arcs are never touched.
    """
    full = set(g.arcs)
    residual = set(g.arcs)
    degs = degree_dict(g)
    steps: list[Swap] = []
    while residual:
        pivot = choose_pivot(degs, strategy)
        order = normal_sequence(degs, pivot)
        d = degs[pivot][0]
        ordering = Ordering(tuple(order) + (pivot,), "normal")
        current = {v for u, v in residual if u == pivot}
        target = OutNeighborhood.of(ordering, pivot, order[:d])
        pon = OutNeighborhood.of(ordering, pivot, current)
        for i, k in left_shift_pairs(target, pon, ordering):
            s = _shift_arcs(residual, degs, pivot, k, i)
            _apply_arcs(full, s)
            steps.append(s)
        for h in order[:d]:
            residual.discard((pivot, h))
            o, n_in = degs[h]
            degs[h] = (o, n_in - 1)
        degs[pivot] = (0, degs[pivot][1])
        degs = {v: x for v, x in degs.items() if x != (0, 0)}
    return SwapSequence(tuple(steps)), DiGraph(frozenset(full), g.n)


def trim(seq: SwapSequence) -> SwapSequence:
    """Cancel adjacent swap/inverse pairs; the result is still applicable."""
    out: list[Swap] = []
    for s in seq:
        if out and _same_move(out[-1], inverse(s)):
            out.pop()
        else:
            out.append(s)
    return SwapSequence(tuple(out))


def _same_move(a: Swap, b: Swap) -> bool:
    return set(a.removed) == set(b.removed) and set(a.added) == set(b.added)


def swap_path(g1: DiGraph, g2: DiGraph, strategy: str = "max-out", trimmed: bool = False) -> SwapSequence:
    """Swaps taking ``g1`` to ``g2``: both are driven to the same canonical graph,
    then the second leg is replayed backwards. At most ``2 * len(g1)`` steps."""
    if degree_dict(g1) != degree_dict(g2):
        raise DegreeSequenceMismatch("graphs realize different bi-degree sequences")
    t1, c1 = canonicalize(g1, strategy)
    t2, c2 = canonicalize(g2, strategy)
    if c1.arcs != c2.arcs:
        raise AssertionError("canonical forms differ for the same degree sequence")
    seq = t1 + t2.inverted()
    return trim(seq) if trimmed else seq


def verify_path(g1: DiGraph, seq: SwapSequence | Iterable[Swap], g2: DiGraph) -> bool:
    """Replay ``seq`` on ``g1`` checking every step; True iff it ends exactly at ``g2``."""
    arcs = set(g1.arcs)
    start = degree_dict(g1)
    for s in seq:
        try:
            _apply_arcs(arcs, s)
        except SwapNotApplicable:
            return False
    if degree_dict(DiGraph(frozenset(arcs))) != start:
        return False
    return arcs == set(g2.arcs)
