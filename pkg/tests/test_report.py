"""Family records, search reports, JSON round trips, and shard merging."""

import pytest

from switchdeck.digraph import from_arcs, parse_digraph6
from switchdeck.report import Family, SearchReport, make_family, merge_reports

P4A = from_arcs(4, [(0, 1), (1, 2), (2, 3)])
P4B = from_arcs(4, [(0, 1), (2, 1), (2, 3)])
ARC = from_arcs(2, [(0, 1)])


def test_make_family_checks_its_claim():
    fam = make_family("paths", 0, [P4A, P4B])
    assert fam.size == 2 and fam.n == 4 and fam.t == 0
    assert fam.members == tuple(sorted(fam.members))
    assert sorted(fam.strings()) == sorted(
        ["&C?qO", "&CGJ?"]) or len(fam.strings()) == 2
    with pytest.raises(AssertionError):
        make_family("paths", 0, [P4A, P4A])  # isomorphic members
    with pytest.raises(AssertionError):
        make_family("paths", 1, [P4A, P4B])  # decks differ at t = 1


def test_family_round_trips_through_strings():
    fam = make_family("paths", 0, [P4A, P4B])
    back = [parse_digraph6(s) for s in fam.strings()]
    assert make_family("paths", 0, back) == fam
    d = fam.to_dict()
    assert d["n"] == 4 and d["t"] == 0 and len(d["members"]) == 2


def test_report_dict_schema_and_json_round_trip():
    rep = SearchReport("paths", (1, 4), (0, 1))
    rep.families.append(make_family("paths", 0, [P4A, P4B]))
    rep.counts = {3: 3, 4: 4}
    rep.elapsed_ms = 12
    d = rep.to_dict()
    assert set(d) == {"class", "n_range", "t_range", "families",
                      "counts", "elapsed_ms"}
    assert d["class"] == "paths" and d["n_range"] == [1, 4]
    assert d["counts"] == {"3": 3, "4": 4}
    back = SearchReport.from_json(rep.to_json())
    assert back.families == rep.families
    assert back.counts == rep.counts
    assert back.n_range == rep.n_range and back.t_range == rep.t_range


def test_summary_lines():
    rep = SearchReport("paths", (3, 5), (-1, None))
    rep.families.append(make_family("paths", 0, [P4A, P4B]))
    lines = rep.summary_lines()
    assert lines[0] == "class=paths n=3..5 t=-1..n"
    assert lines[1].startswith("n=4 t=0 size=2: ")
    assert lines[-2] == "families: n=4:1"
    assert lines[-1].startswith("elapsed:")
    assert SearchReport("paths", (1, 2), None).summary_lines()[-2] == \
        "families: none"


def test_families_sorted_by_order_then_t_then_members():
    rep = SearchReport("paths", (2, 4), (0, 1))
    fam_a = make_family("paths", 0, [P4A, P4B])
    fam_b = Family("paths", 3, 1, tuple(sorted(
        make_family("paths", 0, [P4A, P4B]).members))[:2])
    rep.families = [fam_a]
    d = rep.to_dict()
    assert [f["n"] for f in d["families"]] == [4]
    rep.families = [fam_a, fam_a]
    assert len(rep.to_dict()["families"]) == 2  # serialization never dedupes


def test_merge_reports_unions_families_and_adds_counts():
    a = SearchReport("paths", (1, 4), (0, 0))
    b = SearchReport("paths", (5, 6), (0, 0))
    fam = make_family("paths", 0, [P4A, P4B])
    a.families = [fam]
    b.families = [fam]
    a.counts = {4: 4}
    b.counts = {4: 6, 5: 10}
    merged = merge_reports([a, b])
    assert merged.n_range == (1, 6)
    assert merged.families == [fam]  # duplicates collapse
    assert merged.counts == {4: 10, 5: 10}
    assert merged.families_at(4) == [fam]
    assert merged.families_at(5) == []
    with pytest.raises(AssertionError):
        merge_reports([])
