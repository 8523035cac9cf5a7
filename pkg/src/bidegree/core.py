"""Domain types, vertex orderings and degree reductions for bi-degree sequences."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Literal

Arc = tuple[int, int]


class BDSError(ValueError):
    """Base class for malformed instances."""


class NegativeDegree(BDSError):
    pass


class DuplicateVertexId(BDSError):
    pass


class UnknownPivot(BDSError):
    pass


class InvalidPON(BDSError):
    pass


class CardinalityMismatch(BDSError):
    pass


class LoopArc(BDSError):
    pass


class DuplicateArc(BDSError):
    pass


@dataclass(frozen=True, order=True)
class DegreePair:
    out_deg: int
    in_deg: int

    def __post_init__(self):
        if self.out_deg < 0 or self.in_deg < 0:
            raise NegativeDegree(f"negative degree in {(self.out_deg, self.in_deg)}")

    @property
    def is_zero(self) -> bool:
        return self.out_deg == 0 and self.in_deg == 0


@dataclass(frozen=True)
class BiDegreeSequence:
    """(out, in) degree pairs keyed by stable vertex ids.

    Entries are kept sorted by vertex id, so two sequences over the same
    labels compare equal regardless of input order.
    """

    entries: tuple[tuple[int, DegreePair], ...]

    def __post_init__(self):
        ids = [vid for vid, _ in self.entries]
        if len(set(ids)) != len(ids):
            dup = sorted({v for v in ids if ids.count(v) > 1})
            raise DuplicateVertexId(f"duplicate vertex ids: {dup}")
        if ids != sorted(ids):
            object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda e: e[0])))

    @classmethod
    def from_mapping(cls, degrees: Mapping[int, tuple[int, int]]) -> BiDegreeSequence:
        """Build from ``{vid: (out, in)}`` dropping (0, 0) entries."""
        return cls(tuple((v, DegreePair(o, i)) for v, (o, i) in degrees.items() if o or i))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], start: int = 0) -> BiDegreeSequence:
        """Build from positional ``(out, in)`` pairs with implicit ids ``start, start+1, ...``."""
        return validate([(start + k, o, i) for k, (o, i) in enumerate(pairs)])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def ids(self) -> list[int]:
        return [vid for vid, _ in self.entries]

    def as_dict(self) -> dict[int, tuple[int, int]]:
        return {vid: (p.out_deg, p.in_deg) for vid, p in self.entries}

    def pair(self, vid: int) -> DegreePair:
        for v, p in self.entries:
            if v == vid:
                return p
        raise UnknownPivot(f"vertex {vid} not in sequence")

    def __contains__(self, vid: int) -> bool:
        return any(v == vid for v, _ in self.entries)

    @property
    def out_sum(self) -> int:
        return sum(p.out_deg for _, p in self.entries)

    @property
    def in_sum(self) -> int:
        return sum(p.in_deg for _, p in self.entries)

    def __str__(self) -> str:
        return " ".join(f"{v}:({p.out_deg},{p.in_deg})" for v, p in self.entries)


@dataclass(frozen=True)
class DiGraph:
    """Simple labeled digraph. ``n`` is the nominal vertex count."""

    arcs: frozenset[Arc]
    n: int = 0

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise LoopArc(f"loop arc {u}>{v}")
        object.__setattr__(self, "arcs", arcs)
        ends = {x for a in arcs for x in a}
        if self.n < len(ends):
            object.__setattr__(self, "n", len(ends))

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc], n: int = 0) -> DiGraph:
        """Like the constructor but rejects repeated arcs instead of merging them."""
        arcs = list(arcs)
        seen: set[Arc] = set()
        for a in arcs:
            a = (int(a[0]), int(a[1]))
            if a in seen:
                raise DuplicateArc(f"duplicate arc {a[0]}>{a[1]}")
            seen.add(a)
        return cls(frozenset(seen), n)

    def __len__(self) -> int:
        return len(self.arcs)

    def __contains__(self, arc: Arc) -> bool:
        return arc in self.arcs

    def out_neighbors(self, v: int) -> set[int]:
        return {b for a, b in self.arcs if a == v}

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def key(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.arcs))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{u}>{v}" for u, v in self.sorted_arcs()) + "}"


@dataclass(frozen=True)
class Ordering:
    """Positions 1..n mapped to vertex ids, ``order[0]`` being position 1."""

    order: tuple[int, ...]
    kind: Literal["normal", "F-normal", "plain"] = "plain"

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise BDSError(f"not a permutation: {self.order}")

    def position(self, vid: int) -> int:
        return self.order.index(vid) + 1

    def positions(self) -> dict[int, int]:
        return {v: k + 1 for k, v in enumerate(self.order)}

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class OutNeighborhood:
    pivot: int
    members: frozenset[int]
    index_vector: tuple[int, ...]

    @classmethod
    def of(cls, ordering: Ordering, pivot: int, members: Iterable[int]) -> OutNeighborhood:
        members = frozenset(members)
        if pivot in members:
            raise InvalidPON(f"pivot {pivot} cannot be its own out-neighbor")
        pos = ordering.positions()
        missing = [m for m in members if m not in pos]
        if missing:
            raise InvalidPON(f"vertices {sorted(missing)} are not in the ordering")
        return cls(pivot, members, tuple(sorted(pos[m] for m in members)))

    def __len__(self) -> int:
        return len(self.members)


def validate(entries, n: int | None = None) -> BiDegreeSequence:
    """Check and normalise raw input into a :class:`BiDegreeSequence`.

    ``entries`` is either a sequence of ``(out, in)`` pairs (ids ``0..n-1``),
    a sequence of ``(id, out, in)`` triples, a mapping ``{id: (out, in)}``,
    or an existing sequence. Zero-zero entries are dropped. Graphicality
    is not decided here.
    """
    if isinstance(entries, BiDegreeSequence):
        triples = [(v, p.out_deg, p.in_deg) for v, p in entries]
    elif isinstance(entries, Mapping):
        triples = [(v, o, i) for v, (o, i) in entries.items()]
    else:
        triples = []
        for k, e in enumerate(entries):
            e = tuple(e)
            if len(e) == 2:
                triples.append((k, *e))
            elif len(e) == 3:
                triples.append(e)
            else:
                raise BDSError(f"entry {e!r} is neither (out, in) nor (id, out, in)")
    if n is not None and len(triples) > n:
        raise BDSError(f"{len(triples)} entries for {n} vertices")
    ids = [t[0] for t in triples]
    if len(set(ids)) != len(ids):
        dup = sorted({v for v in ids if ids.count(v) > 1})
        raise DuplicateVertexId(f"duplicate vertex ids: {dup}")
    kept = []
    for vid, o, i in triples:
        pair = DegreePair(int(o), int(i))
        if not pair.is_zero:
            kept.append((int(vid), pair))
    return BiDegreeSequence(tuple(kept))


def _normal_key(vid: int, out_deg: int, in_deg: int):
    return (-in_deg, -out_deg, vid)


def normal_order(bds: BiDegreeSequence, pivot: int) -> Ordering:
    """In-degree descending, then out-degree descending, then id; pivot last."""
    if pivot not in bds:
        raise UnknownPivot(f"pivot {pivot} not in sequence")
    rest = sorted(
        (v for v, _ in bds if v != pivot),
        key=lambda v: _normal_key(v, bds.pair(v).out_deg, bds.pair(v).in_deg),
    )
    return Ordering(tuple(rest) + (pivot,), "normal")


def normal_sequence(degrees: Mapping[int, tuple[int, int]], pivot: int, exclude=()) -> list[int]:
    """Non-pivot ids of a ``{id: (out, in)}`` dict in normal order (hot-path helper)."""
    skip = set(exclude)
    skip.add(pivot)
    rest = [v for v in degrees if v not in skip]
    rest.sort(key=lambda v: (-degrees[v][1], -degrees[v][0], v))
    return rest


def is_normal(bds: BiDegreeSequence, ordering: Ordering, pivot: int) -> bool:
    """Linear-scan check of the normal-order condition with ``pivot`` last."""
    if ordering.order[-1] != pivot or sorted(ordering.order) != sorted(bds.ids):
        return False
    degs = bds.as_dict()
    body = ordering.order[:-1]
    for a, b in zip(body, body[1:]):
        (oa, ia), (ob, ib) = degs[a], degs[b]
        if not (ia > ib or (ia == ib and oa >= ob)):
            return False
    return True


def peel(degrees: Mapping[int, tuple[int, int]], pivot: int, heads: Iterable[int]) -> dict[int, tuple[int, int]] | None:
    """Remove arcs ``pivot -> h`` for each head from a degree dict.

    Returns the new dict with zero-zero entries dropped, or ``None`` when a
    degree would go negative.
    """
    out = dict(degrees)
    heads = list(heads)
    o, i = out[pivot]
    if o < len(heads):
        return None
    out[pivot] = (o - len(heads), i)
    for h in heads:
        if h == pivot or h not in out:
            return None
        ho, hi = out[h]
        if hi == 0:
            return None
        out[h] = (ho, hi - 1)
    return {v: d for v, d in out.items() if d != (0, 0)}


def reduce_pivot(bds: BiDegreeSequence, pivot: int) -> BiDegreeSequence | None:
    """One directed Havel-Hakimi round: connect ``pivot`` to the leftmost vertices.

    Returns ``None`` when the sequence is not bi-graphical at this step.
    """
    if pivot not in bds:
        raise UnknownPivot(f"pivot {pivot} not in sequence")
    degs = bds.as_dict()
    d = degs[pivot][0]
    if d > len(degs) - 1:
        return None
    heads = normal_sequence(degs, pivot)[:d]
    reduced = peel(degs, pivot, heads)
    return None if reduced is None else BiDegreeSequence.from_mapping(reduced)


def a_reduce(bds: BiDegreeSequence, pon: OutNeighborhood) -> BiDegreeSequence:
    """Delete the arcs from the pivot to every member of ``pon``."""
    degs = bds.as_dict()
    if pon.pivot not in degs:
        raise UnknownPivot(f"pivot {pon.pivot} not in sequence")
    if len(pon.members) != degs[pon.pivot][0]:
        raise InvalidPON(f"|A| = {len(pon.members)} but pivot out-degree is {degs[pon.pivot][0]}")
    for m in pon.members:
        if m not in degs or degs[m][1] < 1:
            raise InvalidPON(f"member {m} has no in-degree left")
    return BiDegreeSequence.from_mapping(peel(degs, pon.pivot, pon.members))


def is_left_of(b: OutNeighborhood, a: OutNeighborhood) -> bool:
    if len(b.index_vector) != len(a.index_vector):
        raise CardinalityMismatch(f"{len(b.index_vector)} vs {len(a.index_vector)}")
    return all(x <= y for x, y in zip(b.index_vector, a.index_vector))


def degree_dict(g: DiGraph) -> dict[int, tuple[int, int]]:
    """``{vid: (out, in)}`` for every vertex incident to an arc."""
    out: dict[int, list[int]] = {}
    for u, v in g.arcs:
        out.setdefault(u, [0, 0])[0] += 1
        out.setdefault(v, [0, 0])[1] += 1
    return {v: (d[0], d[1]) for v, d in out.items()}


def bds_of(g: DiGraph) -> BiDegreeSequence:
    return BiDegreeSequence.from_mapping(degree_dict(g))
