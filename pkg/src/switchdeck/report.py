"""Result records for deck-equivalence searches."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import canon, decks
from .digraph import Digraph, format_digraph6, parse_digraph6


@dataclass(frozen=True, slots=True)
class Family:
    """A maximal set of pairwise non-isomorphic digraphs sharing a t-deck.

    Members are canonical codes, sorted.  Construction re-checks the claim
    so a Family in hand is always trustworthy.
    """

    class_label: str
    n: int
    t: int
    members: tuple[bytes, ...]

    def __post_init__(self):
        assert len(self.members) >= 2
        assert tuple(sorted(set(self.members))) == self.members

    @property
    def size(self) -> int:
        return len(self.members)

    def digraphs(self) -> list[Digraph]:
        return [canon.code_to_digraph(c) for c in self.members]

    def strings(self) -> list[str]:
        return [format_digraph6(g) for g in self.digraphs()]

    def to_dict(self) -> dict:
        return {"n": self.n, "t": self.t, "members": self.strings()}


def make_family(class_label: str, t: int, graphs: Sequence[Digraph], verify: bool = True) -> Family:
    codes = sorted({canon.canonical_code(g) for g in graphs})
    if verify:
        assert len(codes) == len(graphs), "members must be pairwise non-isomorphic"
        ds = [decks.t_deck(g, t) for g in graphs]
        assert all(d == ds[0] for d in ds[1:]), "members must share the t-deck"
    return Family(class_label, graphs[0].n, t, tuple(codes))


@dataclass(slots=True)
class SearchReport:
    """Everything a census run produced, JSON-serializable."""

    class_label: str
    n_range: tuple[int, int]
    t_range: tuple[int, int] | None
    families: list[Family] = field(default_factory=list)
    counts: dict[int, int] = field(default_factory=dict)
    elapsed_ms: int = 0

    def families_at(self, n: int) -> list[Family]:
        return [f for f in self.families if f.n == n]

    def to_dict(self) -> dict:
        return {
            "class": self.class_label,
            "n_range": list(self.n_range),
            "t_range": list(self.t_range) if self.t_range is not None else None,
            "families": [f.to_dict() for f in sorted(
                self.families, key=lambda f: (f.n, f.t, f.members))],
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "SearchReport":
        report = cls(
            class_label=data["class"],
            n_range=tuple(data["n_range"]),
            t_range=tuple(data["t_range"]) if data.get("t_range") is not None else None,
            counts={int(k): v for k, v in data.get("counts", {}).items()},
            elapsed_ms=data.get("elapsed_ms", 0),
        )
        for fd in data.get("families", []):
            graphs = [parse_digraph6(s) for s in fd["members"]]
            report.families.append(make_family(report.class_label, fd["t"], graphs))
        return report

    @classmethod
    def from_json(cls, text: str) -> "SearchReport":
        return cls.from_dict(json.loads(text))

    def summary_lines(self) -> list[str]:
        lines = [f"class={self.class_label} n={self.n_range[0]}..{self.n_range[1]}"]
        if self.t_range is not None:
            hi = "n" if self.t_range[1] is None else self.t_range[1]
            lines[0] += f" t={self.t_range[0]}..{hi}"
        for f in sorted(self.families, key=lambda f: (f.n, f.t, f.members)):
            lines.append(f"n={f.n} t={f.t} size={f.size}: " + " ".join(f.strings()))
        by_n: dict[int, int] = {}
        for f in self.families:
            by_n[f.n] = by_n.get(f.n, 0) + 1
        lines.append("families: " + (", ".join(
            f"n={n}:{c}" for n, c in sorted(by_n.items())) if by_n else "none"))
        lines.append(f"elapsed: {self.elapsed_ms} ms")
        return lines


def merge_reports(reports: Iterable[SearchReport]) -> SearchReport:
    """Combine disjoint shard runs of the same class into one report.

    Shards partition the work, so per-n counts add up; a family appearing in
    two inputs is kept once.
    """
    reports = list(reports)
    assert reports
    label = reports[0].class_label
    assert all(r.class_label == label for r in reports)
    lo = min(r.n_range[0] for r in reports)
    hi = max(r.n_range[1] for r in reports)
    t_range = reports[0].t_range
    merged = SearchReport(label, (lo, hi), t_range)
    seen: set[tuple[int, int, tuple[bytes, ...]]] = set()
    for r in reports:
        for f in r.families:
            key = (f.n, f.t, f.members)
            if key not in seen:
                seen.add(key)
                merged.families.append(f)
        for n, c in r.counts.items():
            merged.counts[n] = merged.counts.get(n, 0) + c
        merged.elapsed_ms += r.elapsed_ms
    return merged
