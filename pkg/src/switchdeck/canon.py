"""Canonical forms, automorphism groups, and orientation orbits.

The canonical code of a connected digraph is the lexicographically least
adjacency bit-string over all relabellings compatible with iterated
(in, out)-degree refinement, prefixed by the order; disjoint unions compose
their components' codes in sorted order.  Codes are plain bytes and totally
ordered; equal codes mean isomorphic digraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a declared dependency
    _np = None

from .digraph import Digraph, Permutation, UnderlyingGraph, components, in_masks
from .errors import TooLarge

CanonicalCode = bytes

AUT_MAX_N = 16


@dataclass(frozen=True)
class AutGroup:
    """All automorphisms of a graph, as explicit permutations."""

    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _stable_partition(n, out, inn, cells):
    """Refine an ordered partition by (out, in) counts into every cell until stable.

    Cell order is isomorphism-invariant: split cells replace their parent in
    place, sub-ordered by signature.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            buckets: dict = {}
            for v in c:
                ov = out[v]
                iv = inn[v]
                key = tuple((ov & m).bit_count() << 6 | (iv & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                new_cells.append(c)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(buckets[key])
        cells = new_cells
        if not changed:
            return cells


def _code_rows(n, out, perm):
    """Adjacency rows of the relabelled graph, one int per row, MSB = column 0."""
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for v in perm:
        m = out[v]
        row = 0
        while m:
            b = m & -m
            row |= 1 << (n - 1 - pos[b.bit_length() - 1])
            m ^= b
        rows.append(row)
    return rows


@lru_cache(maxsize=1 << 17)
def _canonical_search(g: Digraph):
    """Least adjacency rows over refinement-compatible orders, and one order
    achieving them (position i holds original vertex order[i]).

    Disjoint unions are canonicalized per component and concatenated in
    sorted component order; this keeps the search tree small when many
    components are interchangeable.
    """
    n = g.n
    if n == 0:
        return (), ()
    comp = components(g)
    if len(comp.parts) > 1:
        ranked = sorted(
            range(len(comp.parts)),
            key=lambda i: (comp.parts[i].n, canonical_code(comp.parts[i])),
        )
        order: list[int] = []
        for i in ranked:
            verts = comp.blocks[i].members()
            _, part_order = _canonical_search(comp.parts[i])
            order.extend(verts[v] for v in part_order)
        return tuple(_code_rows(n, g.out, order)), tuple(order)
    out = g.out
    inn = in_masks(g)
    best: list[int] | None = None
    best_order: list[int] | None = None

    def rec(cells):
        nonlocal best, best_order
        for idx, c in enumerate(cells):
            if len(c) > 1:
                for v in c:
                    rest = [w for w in c if w != v]
                    refined = _stable_partition(
                        n, out, inn, cells[:idx] + [[v], rest] + cells[idx + 1:]
                    )
                    rec(refined)
                return
        order = [c[0] for c in cells]
        rows = _code_rows(n, out, order)
        if best is None or rows < best:
            best = rows
            best_order = order

    rec(_stable_partition(n, out, inn, [list(range(n))]))
    assert best is not None and best_order is not None
    return tuple(best), tuple(best_order)


@lru_cache(maxsize=1 << 17)
def canonical_code(g: Digraph) -> CanonicalCode:
    """Order-prefixed, lexicographically least adjacency bit-string."""
    n = g.n
    if n == 0:
        return bytes([0])
    best, _ = _canonical_search(g)
    packed = bytearray([n])
    acc = 0
    filled = 0
    for row in best:
        for j in range(n):
            acc = acc << 1 | (row >> (n - 1 - j) & 1)
            filled += 1
            if filled == 8:
                packed.append(acc)
                acc = 0
                filled = 0
    if filled:
        packed.append(acc << (8 - filled))
    return bytes(packed)


def code_to_digraph(code: CanonicalCode) -> Digraph:
    """Decode a canonical code back into its representative digraph."""
    n = code[0]
    out = [0] * n
    for v in range(n):
        for w in range(n):
            i = v * n + w
            if code[1 + (i >> 3)] >> (7 - (i & 7)) & 1:
                out[v] |= 1 << w
    return Digraph(n, tuple(out))


def canonical_form(g: Digraph) -> Digraph:
    return code_to_digraph(canonical_code(g))


def canonical_perm(g: Digraph) -> Permutation:
    """A relabelling v -> position that carries g onto its canonical form."""
    _, order = _canonical_search(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return Permutation(tuple(pos))


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    if g.n != h.n or g.arc_count() != h.arc_count():
        return False
    return canonical_code(g) == canonical_code(h)


@lru_cache(maxsize=1 << 14)
def aut_group_undirected(u: UnderlyingGraph) -> AutGroup:
    """Every automorphism of an undirected graph on at most 16 vertices."""
    if u.n > AUT_MAX_N:
        raise TooLarge(f"order {u.n} exceeds automorphism cap {AUT_MAX_N}")
    n = u.n
    adj = u.adj
    cells = _stable_partition(n, adj, adj, [list(range(n))])
    color = [0] * n
    for i, c in enumerate(cells):
        for v in c:
            color[v] = i
    perms: list[Permutation] = []
    image = [0] * n

    def rec(v, used, mapped_img):
        if v == n:
            perms.append(Permutation(tuple(image)))
            return
        want = 0
        m = adj[v] & ((1 << v) - 1)
        while m:
            b = m & -m
            want |= 1 << image[b.bit_length() - 1]
            m ^= b
        cv = color[v]
        for w in range(n):
            if used >> w & 1 or color[w] != cv:
                continue
            if adj[w] & mapped_img == want:
                image[v] = w
                rec(v + 1, used | 1 << w, mapped_img | 1 << w)
        return

    rec(0, 0, 0)
    return AutGroup(tuple(perms))


def edge_list(u: UnderlyingGraph) -> list[tuple[int, int]]:
    """Edges in lexicographic order; this is the fixed edge order for orientations."""
    return sorted(u.edges())


def orientation_orbit_min(
    u: UnderlyingGraph, aut: AutGroup, o: Sequence[int]
) -> tuple[int, ...]:
    """Lexicographically least image of an orientation vector under aut.

    o[i] = 0 orients edge i of edge_list(u) from its lower to its higher
    endpoint, 1 the other way.  Images are built edge by edge so a losing
    permutation is abandoned at the first position that exceeds the best.
    """
    edges = edge_list(u)
    m = len(edges)
    index = {e: i for i, e in enumerate(edges)}
    best = list(o)
    for p in aut.elements:
        if p.is_identity():
            continue
        img = p.image
        # position j of the image comes from edge src[j], possibly flipped
        src = [0] * m
        flip = [0] * m
        for i, (a, b) in enumerate(edges):
            a2, b2 = img[a], img[b]
            if a2 < b2:
                src[index[(a2, b2)]] = i
                flip[index[(a2, b2)]] = 0
            else:
                src[index[(b2, a2)]] = i
                flip[index[(b2, a2)]] = 1
        cand: list[int] = []
        better = False
        for j in range(m):
            bit = o[src[j]] ^ flip[j]
            if not better:
                if bit > best[j]:
                    cand = []
                    break
                if bit < best[j]:
                    better = True
            cand.append(bit)
        if better and cand:
            best = cand
    return tuple(best)


def _mix64(x: int) -> int:
    """splitmix64 finalizer; deterministic 64-bit mixing for signatures."""
    mask = (1 << 64) - 1
    x = (x + 0x9E3779B97F4A7C15) & mask
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & mask
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & mask
    return x ^ (x >> 31)


def _mix64_np(a):
    mask = _np.uint64((1 << 64) - 1)
    a = (a + _np.uint64(0x9E3779B97F4A7C15)) & mask
    a = (a ^ (a >> _np.uint64(30))) * _np.uint64(0xBF58476D1CE4E5B9)
    a = (a ^ (a >> _np.uint64(27))) * _np.uint64(0x94D049BB133111EB)
    return a ^ (a >> _np.uint64(31))


class OrientationSpace:
    """Orientations of a fixed underlying graph, as m-bit integers.

    Bit (m-1-i) of an integer stores the direction of edge i in edge_list
    order, so integer order equals lexicographic order on direction vectors.
    Orbit minima under the automorphism group of the underlying graph pick
    one labelled orientation per isomorphism class.
    """

    def __init__(self, u: UnderlyingGraph, aut: AutGroup | None = None):
        self.u = u
        self.n = u.n
        self.edges = edge_list(u)
        self.m = len(self.edges)
        self.aut = aut if aut is not None else aut_group_undirected(u)
        index = {e: i for i, e in enumerate(self.edges)}
        # per non-identity automorphism: bit position tables for the action
        self.actions: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
        for p in self.aut.elements:
            if p.is_identity():
                continue
            img = p.image
            srcpos = [0] * self.m
            flipmask = 0
            for i, (a, b) in enumerate(self.edges):
                a2, b2 = img[a], img[b]
                j = index[(a2, b2)] if a2 < b2 else index[(b2, a2)]
                srcpos[j] = self.m - 1 - i
                if a2 > b2:
                    flipmask |= 1 << (self.m - 1 - j)
            dstpos = tuple(self.m - 1 - j for j in range(self.m))
            self.actions.append((tuple(srcpos), dstpos, flipmask))
        self.switch_masks = []
        for v in range(self.n):
            sm = 0
            for i, (a, b) in enumerate(self.edges):
                if v == a or v == b:
                    sm |= 1 << (self.m - 1 - i)
            self.switch_masks.append(sm)

    @property
    def domain_total(self) -> int:
        return 1 << self.m

    def act(self, action, x: int) -> int:
        srcpos, dstpos, flipmask = action
        y = 0
        for s, d in zip(srcpos, dstpos):
            y |= (x >> s & 1) << d
        return y ^ flipmask

    def orbit_min(self, x: int) -> int:
        best = x
        for action in self.actions:
            y = self.act(action, x)
            if y < best:
                best = y
        return best

    def is_orbit_min(self, x: int) -> bool:
        return all(self.act(action, x) >= x for action in self.actions)

    def act_array(self, action, xs):
        srcpos, dstpos, flipmask = action
        one = _np.uint64(1)
        y = _np.zeros_like(xs)
        for s, d in zip(srcpos, dstpos):
            y |= ((xs >> _np.uint64(s)) & one) << _np.uint64(d)
        return y ^ _np.uint64(flipmask)

    def orbit_min_array(self, xs):
        best = xs.copy()
        for action in self.actions:
            _np.minimum(best, self.act_array(action, xs), out=best)
        return best

    def switched_array(self, xs, v: int):
        return xs ^ _np.uint64(self.switch_masks[v])

    def switched(self, x: int, v: int) -> int:
        return x ^ self.switch_masks[v]

    def reps(self, use_numpy: bool | None = None) -> list[int]:
        """All orbit-minimal orientation integers, ascending."""
        total = 1 << self.m
        if not self.actions:
            return list(range(total))
        if use_numpy is None:
            use_numpy = _np is not None and total >= 1 << 16
        if not use_numpy:
            return [x for x in range(total) if self.is_orbit_min(x)]
        return [int(v) for v in self.reps_array()]

    def reps_array(self):
        """Orbit-minimal orientation integers as an ascending uint64 array.

        Small groups get a full-domain scan.  When |group| * 2^m is large the
        scan is replaced by batch marking: each batch of the lowest unmarked
        integers has its orbits computed once and marked off, so total work is
        about one pass over the domain regardless of group order.
        """
        total = 1 << self.m
        if not self.actions:
            return _np.arange(total, dtype=_np.uint64)
        if total * len(self.actions) <= 1 << 32:
            chunks = []
            chunk = 1 << 22
            for start in range(0, total, chunk):
                xs = _np.arange(start, min(start + chunk, total), dtype=_np.uint64)
                chunks.append(xs[self.orbit_min_array(xs) == xs])
            return _np.concatenate(chunks)
        return self._reps_batch_marking(total)

    def _reps_batch_marking(self, total: int):
        # Any unmarked x has its whole orbit unmarked (orbits are marked as
        # units), so its orbit minimum lies in the same ascending batch and the
        # keep test om(batch) == batch is exact.
        marked = _np.zeros(total, dtype=bool)
        reps: list = []
        ptr = 0
        batch_cap = 1 << 15
        scan = 1 << 22
        while ptr < total:
            if marked[ptr]:
                nxt = ptr
                found = False
                while nxt < total:
                    hi = min(nxt + scan, total)
                    hole = _np.flatnonzero(~marked[nxt:hi])
                    if hole.size:
                        nxt += int(hole[0])
                        found = True
                        break
                    nxt = hi
                if not found:
                    break
                ptr = nxt
            hi = min(ptr + scan, total)
            batch = ptr + _np.flatnonzero(~marked[ptr:hi])[:batch_cap]
            batch = batch.astype(_np.uint64)
            om = batch.copy()
            marked[batch] = True
            for action in self.actions:
                img = self.act_array(action, batch)
                _np.minimum(om, img, out=om)
                marked[img] = True
            reps.append(batch[om == batch])
            ptr = int(batch[-1]) + 1
        return _np.concatenate(reps)

    def card(self, x: int, v: int) -> int:
        """Class id of the orientation after switching vertex v."""
        return self.orbit_min(x ^ self.switch_masks[v])

    def digraph(self, x: int) -> Digraph:
        out = [0] * self.n
        for i, (a, b) in enumerate(self.edges):
            if x >> (self.m - 1 - i) & 1:
                out[b] |= 1 << a
            else:
                out[a] |= 1 << b
        return Digraph(self.n, tuple(out))

    def from_digraph(self, g: Digraph) -> int:
        x = 0
        for i, (a, b) in enumerate(self.edges):
            if g.has_arc(b, a):
                x |= 1 << (self.m - 1 - i)
        return x
