"""Switching analysis specialised to cycles.

A cycle orientation is a letter string over the edges (i, i+1 mod n):
0 = forward arc, 1 = backward arc, 2 = arcs both ways.  A rotation gamma by
r positions satisfies G_W = G^gamma for at most a few W; the distinguished
w_set is the solution with fewer than n/2 vertices when that solution is
unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from . import spaces
from .digraph import Digraph, Permutation, VertexSet
from .errors import HypothesisUnmet, NotConnected, TooSmall, WUndefined

FORWARD, BACKWARD, DIGON = 0, 1, 2


@dataclass(frozen=True, slots=True)
class CycleOrientation:
    """An orientation of the n-cycle, one letter per edge (i, i+1 mod n)."""

    n: int
    dirs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise TooSmall(f"cycles need at least 3 vertices, got {self.n}")
        assert len(self.dirs) == self.n
        assert all(d in (FORWARD, BACKWARD, DIGON) for d in self.dirs)

    @property
    def has_digons(self) -> bool:
        return DIGON in self.dirs

    def letters(self) -> str:
        return "".join("FBD"[d] for d in self.dirs)

    @classmethod
    def from_letters(cls, text: str) -> "CycleOrientation":
        return cls(len(text), tuple("FBD".index(c) for c in text.upper()))

    def switched(self, v: int) -> "CycleOrientation":
        """Reverse the two cycle edges at v; arcs both ways stay put."""
        dirs = list(self.dirs)
        for j in ((v - 1) % self.n, v % self.n):
            if dirs[j] != DIGON:
                dirs[j] ^= 1
        return CycleOrientation(self.n, tuple(dirs))

    def switched_set(self, w: VertexSet) -> "CycleOrientation":
        dirs = list(self.dirs)
        for j in range(self.n):
            if dirs[j] != DIGON and (w.bits >> j & 1) != (w.bits >> ((j + 1) % self.n) & 1):
                dirs[j] ^= 1
        return CycleOrientation(self.n, tuple(dirs))

    def rotated(self, r: int) -> "CycleOrientation":
        """The letter string of G^gamma for the rotation by r positions."""
        return CycleOrientation(
            self.n, tuple(self.dirs[(j - r) % self.n] for j in range(self.n))
        )

    def to_digraph(self) -> Digraph:
        out = [0] * self.n
        for j, d in enumerate(self.dirs):
            a, b = j, (j + 1) % self.n
            if d != BACKWARD:
                out[a] |= 1 << b
            if d != FORWARD:
                out[b] |= 1 << a
        return Digraph(self.n, tuple(out))

    @classmethod
    def from_digraph(cls, g: Digraph) -> tuple["CycleOrientation", list[int]]:
        """Read a cycle layout off a digraph whose underlying graph is a cycle.

        Returns the orientation and the vertex order used, so position i of
        the string corresponds to original vertex order[i].
        """
        n = g.n
        from .digraph import underlying

        u = underlying(g)
        if n < 3 or any(u.degree(v) != 2 for v in range(n)):
            raise NotConnected("underlying graph is not a single cycle")
        order = [0]
        prev = -1
        cur = 0
        for _ in range(n - 1):
            nbrs = [w for w in range(n) if u.adj[cur] >> w & 1 and w != prev]
            nxt = min(nbrs) if len(order) == 1 else nbrs[0]
            order.append(nxt)
            prev, cur = cur, nxt
        if sorted(order) != list(range(n)):
            raise NotConnected("underlying graph is not a single cycle")
        dirs = []
        for i in range(n):
            a, b = order[i], order[(i + 1) % n]
            fwd, bwd = g.has_arc(a, b), g.has_arc(b, a)
            dirs.append(DIGON if fwd and bwd else (FORWARD if fwd else BACKWARD))
        return cls(n, tuple(dirs)), order

    def class_int(self) -> int:
        space = spaces.CycleSpace(self.n, digons=self.has_digons)
        return space.orbit_min(space.from_letters(self.dirs))


@dataclass(frozen=True, slots=True)
class Rotation:
    """The cycle rotation v -> v + r (mod n)."""

    n: int
    r: int

    def __post_init__(self):
        assert self.n >= 1
        object.__setattr__(self, "r", self.r % self.n)

    def as_permutation(self) -> Permutation:
        return Permutation(tuple((v + self.r) % self.n for v in range(self.n)))

    @property
    def order(self) -> int:
        return self.n // gcd(self.n, self.r) if self.r else 1

    def inverse(self) -> "Rotation":
        return Rotation(self.n, -self.r % self.n)

    def is_trivial(self) -> bool:
        return self.r == 0


def _solutions(co: CycleOrientation, rot: Rotation) -> Iterator[int]:
    """All W bitmasks with co switched by W equal to co rotated by rot.

    Edge j flips under W exactly when w_j != w_{j+1}, so each non-digon edge
    pins the parity between its endpoints and each digon edge leaves it free
    (switching never moves a digon).  Digon positions must already agree.
    """
    n = co.n
    target = co.rotated(rot.r)
    free: list[int] = []
    flips = [0] * n
    for j in range(n):
        a, b = co.dirs[j], target.dirs[j]
        if (a == DIGON) != (b == DIGON):
            return
        if a == DIGON:
            free.append(j)
        else:
            flips[j] = a ^ b
    if not free:
        w = 0
        bit = 0
        for j in range(n - 1):
            bit ^= flips[j]
            w |= bit << (j + 1)
        last = (w >> (n - 1) & 1) ^ flips[n - 1]
        if last != w & 1:
            return
        yield w
        yield w ^ ((1 << n) - 1)
        return
    # digon edges cut the cycle into arcs; each arc flips independently, so
    # walk each arc once with root 0 and emit every combination of arc flips
    comps: list[int] = []
    ranges: list[int] = []
    k = len(free)
    for i in range(k):
        v = (free[i] + 1) % n
        stop = free[(i + 1) % k]
        bit = 0
        comp = 0
        rng = 1 << v
        while v != stop:
            bit ^= flips[v]
            v = (v + 1) % n
            rng |= 1 << v
            if bit:
                comp |= 1 << v
        comps.append(comp)
        ranges.append(rng)
    for pick in range(1 << k):
        w = 0
        for i in range(k):
            w |= comps[i] ^ ranges[i] if pick >> i & 1 else comps[i]
        yield w


def find_W(co: CycleOrientation, rot: Rotation) -> VertexSet | None:
    """The unique W with co_W = co^rot and |W| < n/2, or None.

    None covers both failure modes: no solution at all, or no unique
    small-side solution (every solution has size exactly n/2, or several
    digon-freed solutions tie below n/2).
    """
    n = co.n
    small = [w for w in _solutions(co, rot) if 2 * w.bit_count() < n]
    if len(small) != 1:
        return None
    return VertexSet(n, small[0])


def w_set(co: CycleOrientation, rot: Rotation) -> VertexSet:
    w = find_W(co, rot)
    if w is None:
        raise WUndefined(f"no unique small switching set for rotation by {rot.r}")
    return w


def dist_set(co: CycleOrientation, rot: Rotation) -> frozenset[int]:
    """Pairwise cyclic distances between members of the w_set."""
    w = w_set(co, rot)
    members = list(w.members())
    n = co.n
    out = set()
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            d = abs(members[i] - members[j])
            out.add(min(d, n - d))
    return frozenset(out)


def verify_w_size_reconstruction(co: CycleOrientation, rot: Rotation) -> dict:
    """Check that |W| is visible in the deck: max over cards of |W(card)| - 2.

    Requires an oriented cycle, a nontrivial rotation with a small solution
    W, and n > 2|W| + 8 so every card keeps a well-defined small solution.
    """
    if co.has_digons:
        raise HypothesisUnmet("requires an oriented cycle")
    if rot.is_trivial():
        raise HypothesisUnmet("requires a nontrivial rotation")
    w = find_W(co, rot)
    if w is None:
        raise WUndefined(f"no unique small switching set for rotation by {rot.r}")
    n = co.n
    if n <= 2 * len(w) + 8:
        raise HypothesisUnmet(f"need n > 2|W| + 8, got n={n}, |W|={len(w)}")
    card_sizes = []
    for v in range(n):
        wv = find_W(co.switched(v), rot)
        assert wv is not None, "cards must keep a well-defined small solution"
        card_sizes.append(len(wv))
    recon = max(card_sizes) - 2
    return {
        "n": n,
        "w_size": len(w),
        "card_w_sizes": card_sizes,
        "reconstructed": recon,
        "holds": recon == len(w),
    }


def search_cycle_families(n_range, t_range=None, digons: bool = False,
                          heavy: bool = False, threads: int = 1, shard=None):
    """Census of same-t-deck families among cycle orientations."""
    from . import census

    label = "digon-cycles" if digons else "cycles"
    return census.run_census(label, n_range, t_range, heavy=heavy,
                             threads=threads, shard=shard)
