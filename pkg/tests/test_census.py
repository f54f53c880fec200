"""Deck grouping, disconnected-pair structure, and the census engines."""

from __future__ import annotations

import pytest

from switchdeck import catalog
from switchdeck.canon import canonical_code, is_isomorphic
from switchdeck.census import (
    _census_reduced_span,
    definite_components,
    group_by_deck,
    possible_components,
    run_census,
    strip_stable_components,
    switching_adjacent,
    verify_disconnected_dichotomy,
    verify_strip_residue,
)
from switchdeck.decks import deck
from switchdeck.digraph import EMPTY, Digraph, disjoint_union, from_arcs
from switchdeck.errors import (
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
from switchdeck.generate import gen_oriented_maxdeg2
from switchdeck.report import SearchReport, make_family, merge_reports

from ._oracles import (
    CYCLES,
    DIGON_CYCLES,
    MAXDEG2,
    ORIENTED,
    PATHS,
    TOURNAMENTS,
)

K1 = Digraph(1, (0,))
ARC = from_arcs(2, [(0, 1)])
TRIANGLE = from_arcs(3, [(0, 1), (1, 2), (2, 0)])
PATH_FF = from_arcs(3, [(0, 1), (1, 2)])
PATH_FB = from_arcs(3, [(0, 1), (2, 1)])


def family_keyset(report: SearchReport) -> set[tuple[int, int, tuple[str, ...]]]:
    return {(f.n, f.t, tuple(f.strings())) for f in report.families}


@pytest.fixture(scope="module")
def maxdeg2_report() -> SearchReport:
    return run_census("maxdeg2", (1, 8))


@pytest.fixture(scope="module")
def tournament_report() -> SearchReport:
    return run_census("tournaments", (1, 8))


def test_group_by_deck_recovers_figure_families():
    pool = list(catalog.family("paths-4a").members)
    pool += list(catalog.family("paths-4b").members)
    pool.append(from_arcs(4, [(0, 1), (1, 2), (2, 3)]))  # duplicate class
    groups = group_by_deck(pool)
    assert sorted(len(g) for g in groups) == [2, 2]
    triple = catalog.family("paths-3").members
    assert group_by_deck(triple) == []  # they share a 1-deck, not a deck
    assert len(group_by_deck(triple, t=1)) == 1


def test_group_by_deck_skips_deckless_graphs_at_negative_t():
    transitive = from_arcs(3, [(0, 1), (1, 2), (0, 2)])
    # the directed triangle's own class is missing from its deck
    assert group_by_deck([TRIANGLE, transitive], t=-1) == []


def test_switching_adjacent():
    assert switching_adjacent(PATH_FF, PATH_FB)
    assert switching_adjacent(PATH_FB, PATH_FF)
    out_star = from_arcs(3, [(1, 0), (1, 2)])
    assert not switching_adjacent(TRIANGLE, out_star)
    assert not switching_adjacent(ARC, PATH_FF)  # order mismatch is just False
    with pytest.raises(NotConnected):
        switching_adjacent(disjoint_union(ARC, K1), PATH_FF)


def test_possible_and_definite_components():
    from switchdeck.digraph import components

    universe = list(gen_oriented_maxdeg2(4))
    member = next(g for g in universe
                  if len(components(g).parts) > 1
                  and sum(deck(h) == deck(g) for h in universe) >= 2)
    with pytest.raises(UniverseNotClosed):
        possible_components(member, universe)
    with pytest.raises(UniverseNotClosed):
        definite_components(member, universe)
    poss = possible_components(member, universe, universe_closed=True)
    defi = definite_components(member, universe, universe_closed=True)
    assert set(defi) <= set(poss)
    sharers = [g for g in universe if deck(g) == deck(member)]
    assert len(sharers) >= 2
    want = {canonical_code(p) for g in sharers for p in components(g).parts}
    assert set(poss) == want
    keep = {canonical_code(p) for p in components(sharers[0]).parts}
    for g in sharers[1:]:
        keep &= {canonical_code(p) for p in components(g).parts}
    assert set(defi) == keep


def test_strip_stable_components():
    res, t = strip_stable_components(disjoint_union(TRIANGLE, K1))
    assert is_isomorphic(res, TRIANGLE) and t == 1
    res, t = strip_stable_components(disjoint_union(ARC, ARC))
    assert res == EMPTY and t == 4
    res, t = strip_stable_components(TRIANGLE)
    assert is_isomorphic(res, TRIANGLE) and t == 0


def test_verify_strip_residue_on_figure_families():
    for key in ("path-unions-8", "cycle-unions-8"):
        out = verify_strip_residue(list(catalog.family(key).members))
        assert out["holds"], key
    bad = [disjoint_union(TRIANGLE, K1, K1),
           disjoint_union(from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), K1)]
    assert not verify_strip_residue(bad)["holds"]


def test_disconnected_dichotomy_option_one():
    g, h = catalog.family("path-unions-8").members
    out = verify_disconnected_dichotomy(g, h)
    assert out["option"] == 1 and out["classes"] <= 4
    g, h = catalog.family("cycle-unions-8").members
    assert verify_disconnected_dichotomy(g, h)["option"] == 1


def test_disconnected_dichotomy_option_two():
    a, b = catalog.family("cycles-6a").members
    g, h = disjoint_union(a, ARC), disjoint_union(b, ARC)
    out = verify_disconnected_dichotomy(g, h)
    assert out == {"option": 2, "t": 2}


def test_disconnected_dichotomy_guards():
    g, h = catalog.family("path-unions-8").members
    with pytest.raises(OrderMismatch):
        verify_disconnected_dichotomy(g, disjoint_union(h, K1))
    with pytest.raises(NotDisconnected):
        verify_disconnected_dichotomy(g, from_arcs(8, [(i, i + 1) for i in range(7)]))
    with pytest.raises(IsomorphicInputs):
        verify_disconnected_dichotomy(g, g)
    with pytest.raises(HypothesisUnmet):
        verify_disconnected_dichotomy(g, disjoint_union(TRIANGLE, TRIANGLE,
                                                        ARC))
    a, b = catalog.family("cycles-6a").members
    with pytest.raises(HypothesisUnmet):  # stable parts differ: 2K1 vs arc
        verify_disconnected_dichotomy(disjoint_union(a, K1, K1),
                                      disjoint_union(b, ARC))


def test_dichotomy_guard_rejects_adjacent_components():
    from switchdeck.census import _check_dichotomy

    bogus = disjoint_union(PATH_FF, PATH_FB)
    other = disjoint_union(PATH_FF, PATH_FF)
    report = SearchReport("maxdeg2", (6, 6), None)
    report.families = [make_family("maxdeg2", 0, [bogus, other], verify=False)]
    with pytest.raises(DichotomyViolated):
        _check_dichotomy(report)


# ---------------------------------------------------------------------------
# census runs at unit scale; frozen outputs come from the reference counts

def test_paths_census_full_t_sweep():
    report = run_census("paths", (1, 8), (-1, None))
    assert report.counts == {n: PATHS[n] for n in range(1, 9)}
    got = family_keyset(report)
    want = {(f.n, f.t, tuple(f.as_family().strings()))
            for f in catalog.families_in_class("paths")}
    want.add((5, -1, ("&D??QI?", "&D?I?W?")))
    assert got == want


def test_cycles_census_matches_figure_families():
    report = run_census("cycles", (3, 8), (-1, None))
    assert report.counts == {n: CYCLES[n] for n in range(3, 9)}
    got = family_keyset(report)
    want = {(f.n, f.t, tuple(f.as_family().strings()))
            for f in catalog.families_in_class("cycles")}
    assert got == want


def test_tournament_census(tournament_report):
    report = tournament_report
    assert report.counts == {n: TOURNAMENTS[n] for n in range(1, 9)}
    shapes: dict[tuple[int, int], int] = {}
    for f in report.families:
        shapes[f.n, f.size] = shapes.get((f.n, f.size), 0) + 1
    assert shapes == {(4, 2): 1, (8, 2): 20, (8, 3): 4, (8, 4): 2}
    quad = next(f for f in report.families if f.size == 4 and f.n == 8)
    corpus = catalog.family("tournaments-8").as_family()
    assert any(f.members == corpus.members for f in report.families)
    assert quad.t == 0


def test_digon_cycles_census():
    report = run_census("digon-cycles", (3, 8))
    assert report.counts == {n: DIGON_CYCLES[n] for n in range(3, 9)}
    by_n: dict[int, int] = {}
    for f in report.families:
        by_n[f.n] = by_n.get(f.n, 0) + 1
    assert by_n == {4: 4, 8: 29}


def test_maxdeg2_census_counts_and_family_profile(maxdeg2_report):
    report = maxdeg2_report
    assert report.counts == {n: MAXDEG2[n] for n in range(1, 9)}
    by_n: dict[int, int] = {}
    for f in report.families:
        by_n[f.n] = by_n.get(f.n, 0) + 1
    assert by_n == {4: 5, 8: 15}
    assert sum(f.size for f in report.families) == 11 + 33


def test_all_oriented_census_small():
    report = run_census("all-oriented", (1, 5))
    assert report.counts == {n: ORIENTED[n] for n in range(1, 6)}
    assert all(f.n == 4 for f in report.families)
    assert len(report.families) == 14
    assert sum(f.size for f in report.families) == 35


def test_every_plain_deck_family_order_is_divisible_by_four(
        tournament_report, maxdeg2_report):
    for report in (run_census("paths", (1, 8)), run_census("cycles", (3, 8)),
                   tournament_report, maxdeg2_report):
        assert all(f.n % 4 == 0 for f in report.families), report.class_label


def test_shards_partition_the_search():
    whole = run_census("cycles", (3, 9), (-1, None))
    parts = [run_census("cycles", (3, 9), (-1, None), shard=(i, 3))
             for i in range(3)]
    merged = merge_reports(parts)
    assert family_keyset(merged) == family_keyset(whole)
    assert merged.counts == whole.counts


def test_threads_do_not_change_the_result(maxdeg2_report):
    duo = run_census("maxdeg2", (1, 8), threads=2)
    assert family_keyset(maxdeg2_report) == family_keyset(duo)
    assert maxdeg2_report.counts == duo.counts


def test_reduced_engine_misses_only_the_union_pairs_at_small_order():
    """The padded-residue engine assumes orders above 12.

    At order 8 it must find exactly the honest families minus the two
    two-residue union pairs, which cannot occur at orders 13 and up.
    """
    honest = family_keyset(run_census("maxdeg2", (8, 8)))
    reduced: set = set()
    counts: dict[int, int] = {}
    for n_res in range(3, 9):
        fams, cnt = _census_reduced_span(n_res, 8, 8)
        reduced |= {(f.n, f.t, tuple(f.strings())) for f in fams}
        for n, c in cnt.items():
            counts[n] = counts.get(n, 0) + c
    missing = honest - reduced
    assert reduced <= honest
    union_keys = {
        (8, 0, tuple(catalog.family(k).as_family().strings()))
        for k in ("path-unions-8", "cycle-unions-8")
    }
    assert missing == union_keys
    assert counts == {8: MAXDEG2[8]}


def test_range_validation():
    with pytest.raises(RangeTooLarge):
        run_census("nonsense", (1, 4))
    with pytest.raises(RangeTooLarge):
        run_census("paths", (5, 4))
    with pytest.raises(RangeTooLarge):
        run_census("cycles", (2, 5))
    with pytest.raises(RangeTooLarge):
        run_census("tournaments", (1, 9))
    with pytest.raises(RangeTooLarge):
        run_census("maxdeg2", (17, 18), (0, 1), heavy=True)
    with pytest.raises(HeavyFlagRequired):
        run_census("cycles", (3, 21))
    with pytest.raises(HeavyFlagRequired):
        run_census("all-oriented", (8, 8))
    with pytest.raises(RangeTooLarge):
        run_census("cycles", (3, 9), shard=(3, 3))
