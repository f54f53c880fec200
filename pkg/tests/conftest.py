"""Shared hypothesis strategies and fixtures."""

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from switchdeck.digraph import Digraph, Permutation, VertexSet, from_arcs

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def arcs_for(n: int, picks: list[int], oriented: bool) -> list[tuple[int, int]]:
    """Decode one draw per vertex pair: 0 none, 1 forward, 2 back, 3 digon."""
    arcs = []
    k = 0
    for a in range(n):
        for b in range(a + 1, n):
            pick = picks[k]
            k += 1
            if pick == 1 or (pick == 3 and not oriented):
                arcs.append((a, b))
            if pick == 2 or (pick == 3 and not oriented):
                arcs.append((b, a))
    return arcs


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 6, oriented: bool = True):
    n = draw(st.integers(min_n, max_n))
    pairs = n * (n - 1) // 2
    picks = draw(st.lists(st.integers(0, 3), min_size=pairs, max_size=pairs))
    return from_arcs(n, arcs_for(n, picks, oriented), oriented=oriented)


@st.composite
def digraph_pairs(draw, min_n: int = 1, max_n: int = 6, oriented: bool = True):
    n = draw(st.integers(min_n, max_n))
    pairs = n * (n - 1) // 2
    out = []
    for _ in range(2):
        picks = draw(st.lists(st.integers(0, 3), min_size=pairs, max_size=pairs))
        out.append(from_arcs(n, arcs_for(n, picks, oriented), oriented=oriented))
    return out[0], out[1]


@st.composite
def vertex_sets(draw, g: Digraph | None = None, n: int | None = None):
    order = g.n if g is not None else n
    bits = draw(st.integers(0, (1 << order) - 1))
    return VertexSet(order, bits)


@st.composite
def graph_and_set(draw, min_n: int = 1, max_n: int = 6, oriented: bool = True):
    g = draw(digraphs(min_n, max_n, oriented))
    w = draw(st.integers(0, (1 << g.n) - 1))
    return g, VertexSet(g.n, w)


@st.composite
def graph_and_perm(draw, min_n: int = 1, max_n: int = 6, oriented: bool = True):
    g = draw(digraphs(min_n, max_n, oriented))
    image = draw(st.permutations(range(g.n)))
    return g, Permutation(tuple(image))


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
