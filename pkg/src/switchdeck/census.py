"""Deck-equivalence censuses over whole graph classes.

run_census enumerates every isomorphism class of a class label over a range
of orders, groups the classes that share a t-deck, and returns the families
in a SearchReport.  Small spaces are grouped exactly in python; large spaces
go through a vectorized 64-bit signature pipeline whose candidate groups are
re-verified exactly, so the output is exact either way.

Grouping decomposes soundly: every card of a digraph keeps the labelled
underlying graph, so graphs with equal decks share their underlying class
(and in particular their max-degree-2 shape), and families never straddle
underlying classes.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import chain, combinations_with_replacement, product
from math import comb
from typing import Callable, Iterable, Sequence

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

from . import canon, decks, generate, spaces
from .canon import OrientationSpace, _mix64_np
from .digraph import (
    EMPTY,
    Digraph,
    components,
    disjoint_union,
    from_arcs,
    is_weakly_connected,
)
from .errors import (
    CardAbsent,
    DichotomyViolated,
    HeavyFlagRequired,
    HypothesisUnmet,
    IsomorphicInputs,
    NotConnected,
    NotDisconnected,
    OrderMismatch,
    RangeTooLarge,
    UniverseNotClosed,
)
from .report import Family, SearchReport, make_family
from .stability import is_switching_stable, is_switching_stable_set
from .switching import switch_vertex

# label -> (n_min, n_max, heavy_over): orders above heavy_over need heavy=True
CLASS_BOUNDS: dict[str, tuple[int, int, int]] = {
    "paths": (1, 30, 20),
    "cycles": (3, 30, 20),
    "digon-cycles": (3, 20, 16),
    "maxdeg2": (1, 30, 16),
    "tournaments": (1, 8, 8),
    "all-oriented": (1, 8, 7),
}

_PY_LIMIT = 1 << 10       # domains up to this size are grouped in pure python
_STREAM_LIMIT = 1 << 26   # rep counts above this stream the domain per t

# every work unit yields families plus per-order class counts
_TaskOut = tuple[list["Family"], dict[int, int]]


def _tag(n: int, out: tuple[list[Family], int]) -> _TaskOut:
    families, size = out
    return families, ({n: size} if size else {})


def group_by_deck(graphs: Iterable[Digraph], t: int = 0) -> list[list[Digraph]]:
    """Groups of >= 2 pairwise non-isomorphic digraphs sharing a t-deck.

    Isomorphic duplicates collapse first; at t = -1 a graph whose own class
    is missing from its deck is skipped, mirroring the t-deck definition.
    """
    by_code: dict[bytes, Digraph] = {}
    for g in graphs:
        by_code.setdefault(canon.canonical_code(g), g)
    buckets: dict[tuple, list[Digraph]] = {}
    for _, g in sorted(by_code.items()):
        try:
            d = decks.t_deck(g, t)
        except CardAbsent:
            continue
        buckets.setdefault(d.cards, []).append(g)
    return [grp for grp in buckets.values() if len(grp) >= 2]


def switching_adjacent(a: Digraph, b: Digraph) -> bool:
    """True when some single-vertex switch of a is isomorphic to b."""
    if not (is_weakly_connected(a) and is_weakly_connected(b)):
        raise NotConnected("switching adjacency is defined between connected digraphs")
    if a.n != b.n:
        return False
    target = canon.canonical_code(b)
    return any(canon.canonical_code(switch_vertex(a, v)) == target for v in range(a.n))


def possible_components(g: Digraph, universe: Iterable[Digraph],
                        universe_closed: bool = False) -> list[bytes]:
    """Component classes over every universe member sharing g's deck.

    The universe must contain every graph with g's deck for the answer to
    mean anything, which the caller asserts via universe_closed.
    """
    if not universe_closed:
        raise UniverseNotClosed(
            "pass universe_closed=True only when the universe holds every "
            "graph sharing the deck"
        )
    own = decks.deck(g)
    out: set[bytes] = set()
    for h in chain((g,), universe):
        if h.n == g.n and decks.deck(h) == own:
            out.update(canon.canonical_code(p) for p in components(h).parts)
    return sorted(out)


def definite_components(g: Digraph, universe: Iterable[Digraph],
                        universe_closed: bool = False) -> list[bytes]:
    """Component classes present in every universe member sharing g's deck."""
    if not universe_closed:
        raise UniverseNotClosed(
            "pass universe_closed=True only when the universe holds every "
            "graph sharing the deck"
        )
    own = decks.deck(g)
    acc: set[bytes] | None = None
    for h in chain((g,), universe):
        if h.n == g.n and decks.deck(h) == own:
            codes = {canon.canonical_code(p) for p in components(h).parts}
            acc = codes if acc is None else acc & codes
    return sorted(acc or ())


def strip_stable_components(g: Digraph) -> tuple[Digraph, int]:
    """Drop switching-stable components; returns (residue, stable vertex count)."""
    parts = components(g).parts
    residue = [p for p in parts if not is_switching_stable(p)]
    t = g.n - sum(p.n for p in residue)
    if not residue:
        return EMPTY, t
    return disjoint_union(*residue), t


def verify_strip_residue(graphs: Sequence[Digraph]) -> dict:
    """Same-deck members must agree on stable parts and residue t-decks."""
    strips = [strip_stable_components(g) for g in graphs]
    t0 = strips[0][1]
    stable_parts = []
    for g in graphs:
        stable_parts.append(sorted(
            canon.canonical_code(p) for p in components(g).parts
            if is_switching_stable(p)
        ))
    residue_decks = [decks.t_deck(res, t) for res, t in strips]
    result = {
        "t": t0,
        "t_match": all(t == t0 for _, t in strips),
        "stable_match": all(s == stable_parts[0] for s in stable_parts),
        "residue_deck_match": all(d == residue_decks[0] for d in residue_decks),
    }
    result["holds"] = result["t_match"] and result["stable_match"] and result["residue_deck_match"]
    return result


def verify_disconnected_dichotomy(g: Digraph, h: Digraph,
                                  possible: Sequence[Digraph] | None = None) -> dict:
    """Structure forced on a disconnected same-deck non-isomorphic pair.

    Either both graphs split into one non-stable component plus stable ones,
    with the non-stable components sharing a t-deck for t = stable vertices;
    or both have exactly two components and the possible components form a
    switching-stable set of at most 4 classes of one common order.
    """
    if g.n != h.n:
        raise OrderMismatch("inputs must share an order")
    if is_weakly_connected(g) or is_weakly_connected(h):
        raise NotDisconnected("both inputs must be disconnected")
    if canon.is_isomorphic(g, h):
        raise IsomorphicInputs("inputs must not be isomorphic")
    if decks.deck(g) != decks.deck(h):
        raise HypothesisUnmet("inputs must share a deck")
    gp = components(g).parts
    hp = components(h).parts
    gres = [p for p in gp if not is_switching_stable(p)]
    hres = [p for p in hp if not is_switching_stable(p)]
    if len(gres) == 1 and len(hres) == 1:
        t = g.n - gres[0].n
        if t == h.n - hres[0].n:
            try:
                if decks.t_deck(gres[0], t) == decks.t_deck(hres[0], t):
                    return {"option": 2, "t": t}
            except CardAbsent:
                pass
    if len(gp) == 2 and len(hp) == 2:
        pool = list(possible) if possible is not None else [*gp, *hp]
        by_code = {canon.canonical_code(p): p for p in pool}
        classes = list(by_code.values())
        orders = {p.n for p in classes}
        if (len(orders) == 1 and len(classes) <= 4
                and is_switching_stable_set(classes)):
            return {"option": 1, "classes": len(classes)}
    raise DichotomyViolated(
        f"pair of order {g.n} fits neither disconnected option"
    )


# ---------------------------------------------------------------------------
# generic space engines (paths, cycles, digon cycles, per-underlying spaces)

def _resolve_ts(t_range, n: int) -> list[int]:
    if t_range is None:
        return [0]
    lo, hi = t_range
    if lo < -1:
        raise RangeTooLarge(f"t must be at least -1, got {lo}")
    hi = n if hi is None else min(hi, n)
    return list(range(lo, hi + 1))


def _adjusted_key(cards: list[int], own: int, t: int) -> tuple[int, ...] | None:
    if t == 0:
        return tuple(cards)
    key = list(cards)
    if t == -1:
        try:
            key.remove(own)
        except ValueError:
            return None
        return tuple(key)
    key.extend([own] * t)
    key.sort()
    return tuple(key)


def _families_python(space, reps: Sequence[int], n: int, ts: Sequence[int],
                     label: str) -> list[Family]:
    cards = {x: sorted(space.card(x, v) for v in range(n)) for x in reps}
    families: list[Family] = []
    for t in ts:
        buckets: dict[tuple[int, ...], list[int]] = {}
        for x in reps:
            key = _adjusted_key(cards[x], x, t)
            if key is not None:
                buckets.setdefault(key, []).append(x)
        for _, xs in sorted(buckets.items()):
            if len(xs) >= 2:
                families.append(make_family(label, t, [space.digraph(x) for x in xs]))
    return families


def _verify_candidates(space, cand: Sequence[int], n: int, t: int, label: str) -> list[Family]:
    buckets: dict[tuple[int, ...], list[int]] = {}
    for x in cand:
        key = _adjusted_key(sorted(space.card(x, v) for v in range(n)), x, t)
        if key is not None:
            buckets.setdefault(key, []).append(x)
    out = []
    for _, xs in sorted(buckets.items()):
        if len(xs) >= 2:
            out.append(make_family(label, t, [space.digraph(x) for x in xs]))
    return out


def _dup_values(sig):
    srt = _np.sort(sig)
    eq = srt[1:] == srt[:-1]
    return _np.unique(srt[1:][eq])


def _families_numpy(space, xs, n: int, ts: Sequence[int], label: str) -> list[Family]:
    chunk = 1 << 22
    sig0 = _np.zeros(len(xs), dtype=_np.uint64)
    has_own = _np.zeros(len(xs), dtype=bool)
    for s in range(0, len(xs), chunk):
        sl = slice(s, min(s + chunk, len(xs)))
        for v in range(n):
            y = space.orbit_min_array(space.switched_array(xs[sl], v))
            sig0[sl] += _mix64_np(y)
            has_own[sl] |= y == xs[sl]
    own_mix = _mix64_np(xs)
    families: list[Family] = []
    for t in ts:
        if t == -1:
            sig = (sig0 - own_mix)[has_own]
            pool = xs[has_own]
        elif t == 0:
            sig = sig0
            pool = xs
        else:
            sig = sig0 + _np.uint64(t) * own_mix
            pool = xs
        dups = _dup_values(sig)
        if len(dups) == 0:
            continue
        cand = pool[_np.isin(sig, dups)]
        families.extend(_verify_candidates(space, [int(v) for v in cand], n, t, label))
    return families


def _families_streaming(space, n: int, ts: Sequence[int], label: str) -> list[Family]:
    """Per-t domain streaming for rep sets too large to hold comfortably.

    Pass one computes the signature of every representative in domain order
    and sorts it in place; a second pass only runs when duplicate signatures
    exist, re-deriving which representatives carry them.
    """
    chunk = 1 << 22
    total = space.domain_total
    families: list[Family] = []

    def rep_chunks():
        for start in range(0, total, chunk):
            xs = space.domain_chunk(start, min(start + chunk, total))
            yield xs[space.orbit_min_array(xs) == xs]

    for t in ts:
        sigs = _np.empty(space.count(), dtype=_np.uint64)
        pos = 0
        for xs in rep_chunks():
            s = _np.zeros(len(xs), dtype=_np.uint64)
            hw = _np.zeros(len(xs), dtype=bool)
            for v in range(n):
                y = space.orbit_min_array(space.switched_array(xs, v))
                s += _mix64_np(y)
                hw |= y == xs
            if t == -1:
                s = (s - _mix64_np(xs))[hw]
            elif t > 0:
                s += _np.uint64(t) * _mix64_np(xs)
            sigs[pos:pos + len(s)] = s
            pos += len(s)
        sigs = sigs[:pos]
        sigs.sort()
        eq = sigs[1:] == sigs[:-1]
        dups = _np.unique(sigs[1:][eq])
        del sigs
        if len(dups) == 0:
            continue
        cand: list[int] = []
        for xs in rep_chunks():
            s = _np.zeros(len(xs), dtype=_np.uint64)
            hw = _np.zeros(len(xs), dtype=bool)
            for v in range(n):
                y = space.orbit_min_array(space.switched_array(xs, v))
                s += _mix64_np(y)
                hw |= y == xs
            if t == -1:
                keep = hw & _np.isin((s - _mix64_np(xs)), dups)
            elif t > 0:
                keep = _np.isin(s + _np.uint64(t) * _mix64_np(xs), dups)
            else:
                keep = _np.isin(s, dups)
            cand.extend(int(v) for v in xs[keep])
        families.extend(_verify_candidates(space, cand, n, t, label))
    return families


def _space_census(space, n: int, ts: Sequence[int], label: str) -> tuple[list[Family], int]:
    """Families plus the number of isomorphism classes in the space."""
    total = space.domain_total
    if _np is None or total < _PY_LIMIT:
        reps = space.reps()
        return _families_python(space, reps, n, ts, label), len(reps)
    counter = getattr(space, "count", None)
    if counter is not None and counter() > _STREAM_LIMIT:
        return _families_streaming(space, n, ts, label), counter()
    xs = space.reps_array()
    if counter is not None:
        assert len(xs) == counter()
    return _families_numpy(space, xs, n, ts, label), len(xs)


# ---------------------------------------------------------------------------
# max-degree-2 engine

@lru_cache(maxsize=64)
def _part_space(kind: str, k: int):
    return spaces.PathSpace(k) if kind == "p" else spaces.CycleSpace(k)


@lru_cache(maxsize=256)
def _part_reps(kind: str, k: int) -> tuple[int, ...]:
    return tuple(_part_space(kind, k).reps())


def _comp_digraph(comp: tuple[str, int, int]) -> Digraph:
    kind, k, x = comp
    return _part_space(kind, k).digraph(x)


def _build_union(comps: Sequence[tuple[str, int, int]]) -> Digraph:
    return disjoint_union(*[_comp_digraph(c) for c in comps])


def _shape_tasks(n: int, ts: Sequence[int]) -> list[Callable[[], tuple[list[Family], int]]]:
    tasks = []
    for shape in generate.maxdeg2_shapes(n):
        tasks.append(lambda shape=shape: _census_one_shape(n, shape, ts))
    return tasks


def _census_one_shape(n: int, shape, ts: Sequence[int]) -> tuple[list[Family], int]:
    """Group one component shape by t-deck using component class arithmetic.

    The multiset of component classes is a faithful class invariant of a
    disjoint union, and each card only replaces one component by its switched
    class, so decks are computed without ever materializing labelled graphs.
    """
    groups = generate._part_groups(shape)
    reps_per_group = [
        list(combinations_with_replacement(_part_reps(kind, k), mult))
        for (kind, k), mult in groups
    ]
    entries = []
    for choice in product(*reps_per_group):
        comps: list[tuple[str, int, int]] = []
        for ((kind, k), _), picks in zip(groups, choice):
            comps.extend((kind, k, x) for x in picks)
        key = tuple(sorted(comps))
        deck: dict[tuple, int] = {}
        seen_mult: dict[tuple[str, int, int], int] = {}
        for c in comps:
            seen_mult[c] = seen_mult.get(c, 0) + 1
        base = list(key)
        for c, mult in seen_mult.items():
            kind, k, x = c
            sp = _part_space(kind, k)
            removed = list(base)
            removed.remove(c)
            for v in range(k):
                card_comp = (kind, k, sp.card(x, v))
                card_key = tuple(sorted(removed + [card_comp]))
                deck[card_key] = deck.get(card_key, 0) + mult
        entries.append((key, deck))
    families: list[Family] = []
    for t in ts:
        buckets: dict[tuple, list[tuple]] = {}
        for key, deck in entries:
            items = dict(deck)
            if t == -1:
                if not items.get(key):
                    continue
                items[key] -= 1
                if items[key] == 0:
                    del items[key]
            elif t > 0:
                items[key] = items.get(key, 0) + t
            bucket_key = tuple(sorted(items.items()))
            buckets.setdefault(bucket_key, []).append(key)
        for _, keys in sorted(buckets.items()):
            if len(keys) >= 2:
                families.append(make_family("maxdeg2", t, [_build_union(k) for k in keys]))
    return families, len(entries)


def _stable_unit_graphs() -> tuple[Digraph, Digraph, Digraph]:
    k1 = Digraph(1, (0,))
    arc = from_arcs(2, [(0, 1)])
    stable_c4 = from_arcs(4, [(0, 1), (1, 3), (3, 2), (0, 2)])
    return k1, arc, stable_c4


def _stable_paddings(t: int) -> list[tuple[int, int, int]]:
    """Multisets of stable connected classes on t vertices as (k1, arc, c4)."""
    out = []
    for c4 in range(t // 4 + 1):
        for arc in range((t - 4 * c4) // 2 + 1):
            out.append((t - 4 * c4 - 2 * arc, arc, c4))
    return out


def _maxdeg2_class_count(n: int) -> int:
    """Multisets of path/cycle classes totalling n vertices."""
    dp = [0] * (n + 1)
    dp[0] = 1
    for k in range(1, n + 1):
        m = spaces.PathSpace(k).count()
        if k >= 3:
            m += spaces.CycleSpace(k).count()
        ndp = [0] * (n + 1)
        for s in range(n + 1):
            if dp[s] == 0:
                continue
            j = 0
            while s + j * k <= n:
                ndp[s + j * k] += dp[s] * comb(m + j - 1, j)
                j += 1
        dp = ndp
    return dp[n]


def _reduced_span_tasks(lo: int, hi: int) -> list[Callable[[], _TaskOut]]:
    return [lambda nr=nr: _census_reduced_span(nr, lo, hi)
            for nr in range(3, hi + 1)]


def _census_reduced_span(n_res: int, lo: int, hi: int) -> _TaskOut:
    """Plain-deck families over orders lo..hi whose residue has n_res vertices.

    Above order 12 every same-deck pair either is connected or carries exactly
    one non-stable component each, so a family is a connected path-or-cycle
    t-deck family padded with one multiset of stable components on the other
    t = n - n_res vertices.  One scan of each residue space covers every
    target order; the n_res = 3 unit carries the analytic class counts.
    """
    ts = [n - n_res for n in range(max(lo, n_res), hi + 1)]
    families: list[Family] = []
    k1, arc, c4 = _stable_unit_graphs()
    if ts:
        for space in (spaces.PathSpace(n_res), spaces.CycleSpace(n_res)):
            for fam in _space_census(space, n_res, ts, "residue")[0]:
                residues = fam.digraphs()
                for nk1, narc, nc4 in _stable_paddings(fam.t):
                    pad = [k1] * nk1 + [arc] * narc + [c4] * nc4
                    members = [disjoint_union(r, *pad) for r in residues]
                    families.append(make_family("maxdeg2", 0, members))
    counts = ({n: _maxdeg2_class_count(n) for n in range(lo, hi + 1)}
              if n_res == 3 else {})
    return families, counts


# ---------------------------------------------------------------------------
# tournaments and the full oriented census

def _census_tournaments(n: int, ts: Sequence[int]) -> tuple[list[Family], int]:
    graphs = list(generate.gen_tournaments(n))
    families = []
    for t in ts:
        for grp in group_by_deck(graphs, t):
            families.append(make_family("tournaments", t, grp, verify=False))
    return families, len(graphs)


def _all_oriented_tasks(n: int, ts: Sequence[int]) -> list[Callable[[], tuple[list[Family], int]]]:
    return [
        lambda u=u: _census_one_underlying(u, n, ts)
        for u in generate.gen_underlying_graphs(n)
    ]


def _census_one_underlying(u, n: int, ts: Sequence[int]) -> tuple[list[Family], int]:
    return _space_census(OrientationSpace(u), n, ts, "all-oriented")


# ---------------------------------------------------------------------------
# driver

def _validate(label: str, lo: int, hi: int, heavy: bool):
    if label not in CLASS_BOUNDS:
        raise RangeTooLarge(f"unknown class {label!r}")
    n_min, n_max, heavy_over = CLASS_BOUNDS[label]
    if lo > hi:
        raise RangeTooLarge(f"empty range {lo}..{hi}")
    if lo < n_min or hi > n_max:
        raise RangeTooLarge(
            f"{label} census supports {n_min}..{n_max}, got {lo}..{hi}"
        )
    if hi > heavy_over and not heavy:
        raise HeavyFlagRequired(
            f"{label} orders above {heavy_over} need heavy=True (asked for {hi})"
        )


def _space_for(label: str, n: int):
    if label == "paths":
        return spaces.PathSpace(n)
    if label == "cycles":
        return spaces.CycleSpace(n)
    return spaces.CycleSpace(n, digons=True)


def run_census(class_label: str, n_range: tuple[int, int], t_range=None,
               heavy: bool = False, threads: int = 1, shard=None) -> SearchReport:
    """Exhaustive t-deck family search for one class over a range of orders.

    shard=(i, k) keeps every k-th work unit starting at i; units never split
    a family, so shard outputs merge losslessly via merge_reports.  Units are
    whole orders for the string classes and tournaments, component shapes or
    residue orders for maxdeg2, and underlying classes for all-oriented.
    """
    t0 = time.monotonic()
    lo, hi = n_range
    _validate(class_label, lo, hi, heavy)
    if class_label == "maxdeg2" and hi > 16 and _resolve_ts(t_range, hi) != [0]:
        raise RangeTooLarge(
            "maxdeg2 orders above 16 support plain decks (t = 0) only"
        )
    tasks: list[Callable[[], _TaskOut]] = []

    def tagged(n: int, fn: Callable[[], tuple[list[Family], int]]):
        tasks.append(lambda: _tag(n, fn()))

    for n in range(lo, hi + 1):
        ts = _resolve_ts(t_range, n)
        if class_label in ("paths", "cycles", "digon-cycles"):
            space = _space_for(class_label, n)
            tagged(n, lambda space=space, n=n, ts=ts:
                   _space_census(space, n, ts, class_label))
        elif class_label == "tournaments":
            tagged(n, lambda n=n, ts=ts: _census_tournaments(n, ts))
        elif class_label == "maxdeg2" and n <= 16:
            for fn in _shape_tasks(n, ts):
                tagged(n, fn)
        elif class_label == "all-oriented":
            for fn in _all_oriented_tasks(n, ts):
                tagged(n, fn)
    if class_label == "maxdeg2" and hi > 16:
        tasks.extend(_reduced_span_tasks(max(lo, 17), hi))
    if shard is not None:
        idx, total = shard
        if not 0 <= idx < total:
            raise RangeTooLarge(f"shard index {idx} outside 0..{total - 1}")
        tasks = tasks[idx::total]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outputs = list(pool.map(lambda fn: fn(), tasks))
    else:
        outputs = [fn() for fn in tasks]
    report = SearchReport(class_label, (lo, hi),
                          tuple(t_range) if t_range is not None else None)
    for families, counts in outputs:
        report.families.extend(families)
        for n, size in counts.items():
            report.counts[n] = report.counts.get(n, 0) + size
    _check_dichotomy(report)
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def _check_dichotomy(report: SearchReport):
    """Structural guards on every discovered family.

    No disconnected family member may contain two non-isomorphic
    switching-adjacent components, and disconnected same-deck pairs must fit
    the two-option structure.
    """
    for fam in report.families:
        graphs = fam.digraphs()
        disconnected = [g for g in graphs if not is_weakly_connected(g)]
        for g in disconnected:
            parts = components(g).parts
            codes = [canon.canonical_code(p) for p in parts]
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    if codes[i] != codes[j] and switching_adjacent(parts[i],
                                                                   parts[j]):
                        raise DichotomyViolated(
                            "family member joins two non-isomorphic "
                            "switching-adjacent components"
                        )
        if fam.t != 0 or len(disconnected) < 2:
            continue
        pool = [p for g in disconnected for p in components(g).parts]
        for i in range(len(disconnected)):
            for j in range(i + 1, len(disconnected)):
                verify_disconnected_dichotomy(disconnected[i], disconnected[j],
                                              possible=pool)
