import random

import pytest
from hypothesis import strategies as st

from bidegree import BiDegreeSequence, DiGraph, Swap
from bidegree.swaps import SwapError


def random_digraph(rng: random.Random, n: int, p: float) -> DiGraph:
    return DiGraph(frozenset((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p), n)


def random_valid_swap(g: DiGraph, rng: random.Random) -> Swap | None:
    """Draw a random applicable swap of a random kind, or None."""
    arcs = sorted(g.arcs)
    if len(arcs) < 2:
        return None
    out = {}
    for u, v in arcs:
        out.setdefault(u, []).append(v)
    kind = rng.choice(["pair", "path", "triangle"])
    a, b = rng.choice(arcs)
    try:
        if kind == "pair":
            c, d = rng.choice(arcs)
            s = Swap.pair(a, b, c, d)
        else:
            c = rng.choice(out.get(b, [a]))
            if kind == "triangle":
                s = Swap.triangle(a, b, c)
            else:
                s = Swap.triple_path(a, b, c, rng.choice(out.get(c, [a])))
    except SwapError:
        return None
    if set(s.removed) <= g.arcs and not set(s.added) & g.arcs:
        return s
    return None


def swaps_for(g, rng, tries=200):
    for _ in range(tries):
        s = random_valid_swap(g, rng)
        if s is not None:
            return s
    return None


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return DiGraph(frozenset(chosen), n)


@st.composite
def sequences(draw, max_n=5, max_deg=4):
    n = draw(st.integers(0, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)), min_size=n, max_size=n))
    return BiDegreeSequence.from_pairs(pairs)


@pytest.fixture
def triangle():
    return DiGraph(frozenset({(1, 2), (2, 3), (3, 1)}))


@pytest.fixture
def ones3():
    return BiDegreeSequence.from_pairs([(1, 1)] * 3, start=1)
