"""Switching stability and the group of switching isomorphisms.

A digraph is switching-stable when every single-vertex switch lands back in
its own isomorphism class.  The switching isomorphisms of a digraph D are the
permutations gamma admitting some W with D_W = D^gamma; they form a group
sandwiched between Aut(D) and Aut(underlying(D)).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as _np

from . import canon, generate
from .canon import AutGroup, OrientationSpace
from .digraph import (
    Digraph,
    Permutation,
    VertexSet,
    apply_perm,
    is_weakly_connected,
    underlying,
    underlying_apply_perm,
)
from .errors import (
    Disconnected,
    EmptySet,
    HypothesisUnmet,
    LengthMismatch,
    NotUnderlyingAut,
    OrderMismatch,
    TooLarge,
    TooSmall,
)
from .switching import switch_set, switch_vertex

STABLE_SCAN_MAX_N = 8

# order from which the stability scan may use the group-order divisibility
# prune instead of visiting every orientation class
_STABLE_PRUNE_MIN_N = 8


def is_switching_stable(g: Digraph) -> bool:
    """True when every single-vertex switch of g is isomorphic to g."""
    own = canon.canonical_code(g)
    return all(canon.canonical_code(switch_vertex(g, v)) == own for v in range(g.n))


def classify_stable_connected(n: int) -> list[Digraph]:
    """All connected oriented switching-stable classes on exactly n vertices.

    Scans orientation classes per connected underlying graph.  A connected
    graph with trivial automorphism group admits no stable orientation (a
    switch about a non-isolated vertex moves some edge, and the only possible
    isomorphism back would be an underlying automorphism), so those are
    skipped; complete graphs go through the tournament generator to avoid
    giant permutation action tables.

    Orders 8 and up add a divisibility prune that keeps the scan tractable:
    for a stable D every singleton is a realizable switching set, realizable
    sets are closed under the relabelling-twisted symmetric difference, so
    all 2^(n-1) set pairs are realizable and the switch-isomorphism group --
    a subgroup of Aut(underlying) -- has order |Aut(D)| * 2^(n-1).  Hence
    2^(n-1) must divide the underlying automorphism order.  Orders up to 7
    stay a plain scan so the small cases do not depend on that argument.
    """
    if n < 1:
        raise TooSmall(f"need at least 1 vertex, got {n}")
    if n > STABLE_SCAN_MAX_N:
        raise TooLarge(f"order {n} exceeds stability scan cap {STABLE_SCAN_MAX_N}")
    found: list[Digraph] = []
    for u in generate.gen_underlying_graphs(n):
        if not is_weakly_connected(Digraph(u.n, u.adj)):
            continue
        if n >= 2 and u.is_complete():
            found.extend(g for g in generate.gen_tournaments(n) if is_switching_stable(g))
            continue
        aut = canon.aut_group_undirected(u)
        if n >= 2 and aut.order == 1:
            continue
        if n >= _STABLE_PRUNE_MIN_N and aut.order % (1 << (n - 1)):
            continue
        space = OrientationSpace(u, aut)
        xs = space.reps_array()
        keep = _np.ones(len(xs), dtype=bool)
        for v in range(n):
            keep &= space.orbit_min_array(space.switched_array(xs, v)) == xs
            if not keep.any():
                break
        found.extend(space.digraph(int(x)) for x in xs[keep])
    found.sort(key=canon.canonical_code)
    return found


def is_switching_stable_set(graphs: Iterable[Digraph]) -> bool:
    """True when every vertex switch of every member lands in the set."""
    members = list(graphs)
    if not members:
        raise EmptySet("a stable set needs at least one member")
    n = members[0].n
    if any(g.n != n for g in members):
        raise OrderMismatch("stable-set members must share an order")
    codes = {canon.canonical_code(g) for g in members}
    return all(
        canon.canonical_code(switch_vertex(g, v)) in codes
        for g in members
        for v in range(n)
    )


def check_stable_set_bound(graphs: Sequence[Digraph]) -> dict:
    """Size bound for a stable set of orientations of one connected graph.

    The class count of a stable set M satisfies 2^(n-1) <= |M| * |Aut(U)|;
    when the underlying graph also has maximum degree 2 the automorphism
    order is at most 2n, giving the cruder bound 2^(n-1) <= 2n * |M|.
    """
    members = list(graphs)
    if not members:
        raise EmptySet("a stable set needs at least one member")
    n = members[0].n
    if any(g.n != n for g in members):
        raise OrderMismatch("stable-set members must share an order")
    from .errors import MixedUnderlying

    ucodes = {canon.canonical_code(Digraph(n, underlying(g).adj)) for g in members}
    if len(ucodes) != 1:
        raise MixedUnderlying("members must orient one underlying graph")
    u = underlying(members[0])
    if not is_weakly_connected(Digraph(n, u.adj)):
        raise Disconnected("the underlying graph must be connected")
    if not all(g.is_oriented() for g in members):
        raise HypothesisUnmet("members must be oriented")
    if not is_switching_stable_set(members):
        raise HypothesisUnmet("the set is not switching-stable")
    size = len({canon.canonical_code(g) for g in members})
    aut_order = canon.aut_group_undirected(u).order
    result = {
        "n": n,
        "set_size": size,
        "aut_order": aut_order,
        "bound": 1 << (n - 1),
        "product": size * aut_order,
    }
    result["holds"] = result["bound"] <= result["product"]
    if all(u.degree(v) <= 2 for v in range(n)):
        result["maxdeg2_product"] = 2 * n * size
        result["maxdeg2_holds"] = result["bound"] <= result["maxdeg2_product"]
    return result


def solve_switch_iso(g: Digraph, gamma: Permutation) -> VertexSet | None:
    """A vertex set W with g switched by W equal to g relabelled by gamma.

    Works for connected digraphs, digons included: digon edges never move
    under switching, so they only have to match up front, and each component
    of the non-digon edge graph is rooted at its least vertex with weight 0.
    Returns None when no W exists.
    """
    n = g.n
    if len(gamma) != n:
        raise LengthMismatch(f"permutation on {len(gamma)} vertices, digraph on {n}")
    if not is_weakly_connected(g):
        raise Disconnected("switching isomorphisms need a connected digraph")
    u = underlying(g)
    if underlying_apply_perm(u, gamma) != u:
        raise NotUnderlyingAut("gamma must preserve the underlying graph")
    target = apply_perm(g, gamma)
    digons = g.digon_mask()
    if digons != target.digon_mask():
        return None
    weight = [-1] * n
    for root in range(n):
        if weight[root] != -1:
            continue
        weight[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            m = u.adj[v] & ~digons[v]
            while m:
                b = m & -m
                x = b.bit_length() - 1
                m ^= b
                need = weight[v] ^ (g.has_arc(v, x) != target.has_arc(v, x))
                if weight[x] == -1:
                    weight[x] = need
                    stack.append(x)
                elif weight[x] != need:
                    return None
    bits = 0
    for v in range(n):
        if weight[v]:
            bits |= 1 << v
    w = VertexSet(n, bits)
    if switch_set(g, w) != target:
        return None
    return w


def gamma_group(g: Digraph) -> AutGroup:
    """All switching isomorphisms of a connected digraph."""
    if g.n > canon.AUT_MAX_N:
        raise TooLarge(f"order {g.n} exceeds automorphism cap {canon.AUT_MAX_N}")
    if not is_weakly_connected(g):
        raise Disconnected("switching isomorphisms need a connected digraph")
    u = underlying(g)
    elems = tuple(
        p for p in canon.aut_group_undirected(u) if solve_switch_iso(g, p) is not None
    )
    group = AutGroup(elems)
    images = {p.image for p in elems}
    if group.order <= 512:
        pairs = ((a, b) for a in elems for b in elems)
    else:
        probe = elems[:16] + elems[-16:]
        pairs = ((a, b) for a in probe for b in probe)
    for a, b in pairs:
        assert a.compose(b).image in images, "switching isomorphisms must be closed"
    return group


def _switch_span_basis(masks: Sequence[int]) -> dict[int, int]:
    """Reduced GF(2) basis of the switch flip vectors, keyed by pivot bit."""
    basis: dict[int, int] = {}
    for row in masks:
        cur = row
        while cur:
            pivot = cur.bit_length() - 1
            if pivot in basis:
                cur ^= basis[pivot]
            else:
                for p, r in list(basis.items()):
                    if r >> pivot & 1:
                        basis[p] = r ^ cur
                basis[pivot] = cur
                break
    return basis


def verify_index_identity(n: int) -> dict:
    """Exhaustively check |Gamma(D)| = |Aut(D)| * #{W-pairs with D_W iso D}.

    Runs over every connected oriented class on n vertices, grouped by
    underlying graph.  Group size comes from span membership of flip vectors;
    the W-pair count comes from explicit enumeration of the 2^(n-1) flips.
    For a trivial underlying automorphism group both sides are forced to 1
    once the switch span has rank n-1, which is checked directly.
    """
    one = _np.uint64(1)
    underlying_checked = 0
    classes_checked = 0
    for u in generate.gen_underlying_graphs(n):
        if not is_weakly_connected(Digraph(u.n, u.adj)):
            continue
        aut = canon.aut_group_undirected(u)
        space = OrientationSpace(u, aut)
        basis = _switch_span_basis(space.switch_masks)
        assert len(basis) == max(n - 1, 0), "switch span of a connected graph"
        underlying_checked += 1
        if aut.order == 1:
            classes_checked += 1 << space.m
            continue
        xs = space.reps_array()
        flips = [0] * (1 << max(n - 1, 0))
        for wmask in range(1, len(flips)):
            low = wmask & -wmask
            flips[wmask] = flips[wmask ^ low] ^ space.switch_masks[low.bit_length()]
        farr = _np.array(flips, dtype=_np.uint64)
        gamma_counts = _np.ones(len(xs), dtype=_np.int64)
        aut_counts = _np.ones(len(xs), dtype=_np.int64)
        # D_W iso D for the identity permutation exactly when the flip is 0
        wmatch = _np.zeros((len(xs), len(farr)), dtype=bool)
        wmatch[:, 0] = True
        # each row's top bit is its pivot, so eliminate from the top down
        rows = sorted(basis.items(), reverse=True)
        for action in space.actions:
            y = space.act_array(action, xs)
            aut_counts += y == xs
            delta = xs ^ y
            # act(x ^ f) == x  <=>  delta == gathered f (flip bits follow the
            # same positional permutation as orientation bits)
            gf = space.act_array(action, farr) ^ _np.uint64(action[2])
            wmatch |= delta[:, None] == gf[None, :]
            diff = delta.copy()
            for pivot, row in rows:
                diff ^= ((diff >> _np.uint64(pivot)) & one) * _np.uint64(row)
            gamma_counts += diff == 0
        wcounts = wmatch.sum(axis=1, dtype=_np.int64)
        assert (gamma_counts == aut_counts * wcounts).all(), (
            f"index identity failed on an {n}-vertex underlying graph"
        )
        classes_checked += len(xs)
    return {
        "n": n,
        "underlying_checked": underlying_checked,
        "classes_checked": classes_checked,
        "holds": True,
    }
