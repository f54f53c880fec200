"""Vertex and set switching: reverse every arc with exactly one endpoint inside."""

from __future__ import annotations

from typing import Iterable

from .digraph import Digraph, VertexSet, in_masks
from .errors import VertexOutOfRange


def switch_set(g: Digraph, w: VertexSet | Iterable[int]) -> Digraph:
    """Reverse all arcs with exactly one endpoint in w.

    Digons map to digons, so the underlying graph is unchanged.
    Switching on w and on its complement give the same digraph.
    """
    if isinstance(w, VertexSet):
        bits = w.bits
        if w.n != g.n:
            raise VertexOutOfRange(f"set on {w.n} vertices applied to order {g.n}")
    else:
        bits = VertexSet.from_members(g.n, w).bits
    full = (1 << g.n) - 1
    inn = in_masks(g)
    out = []
    for v in range(g.n):
        same = bits if bits >> v & 1 else full ^ bits
        out.append((g.out[v] & same) | (inn[v] & ~same & full))
    return Digraph(g.n, tuple(out))


def switch_vertex(g: Digraph, v: int) -> Digraph:
    """Reverse all arcs incident with v."""
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    return switch_set(g, VertexSet(g.n, 1 << v))
