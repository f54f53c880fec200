"""Command-line front-end.

Subcommands map library operations onto reproducible shell invocations:
graph streams are newline-delimited digraph6, census reports print as a
plain summary or JSON, and identical invocations produce identical bytes.

Exit codes: 0 success, 1 verification mismatch, 2 bad arguments or input,
3 heavy range without --heavy, 4 missing deck card at t = -1, 5 structural
invariant violated by a discovered family.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from . import catalog, census, decks, generate, spaces
from .canon import canonical_code
from .census import CLASS_BOUNDS, run_census
from .cycles import CycleOrientation, Rotation, dist_set, find_W, verify_w_size_reconstruction
from .digraph import Digraph, apply_perm, format_digraph6, parse_digraph6
from .errors import (
    CardAbsent,
    DichotomyViolated,
    HeavyFlagRequired,
    SwitchDeckError,
)
from .report import SearchReport, merge_reports
from .stability import classify_stable_connected, gamma_group

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_HEAVY = 3
EXIT_CARD = 4
EXIT_DICHOTOMY = 5

# class -> (n_min, n_max, heavy_over) for graph streaming
GEN_BOUNDS = {
    "paths": CLASS_BOUNDS["paths"],
    "cycles": CLASS_BOUNDS["cycles"],
    "digon-cycles": CLASS_BOUNDS["digon-cycles"],
    "maxdeg2": (1, 16, 16),
    "tournaments": (1, 8, 8),
    "all-oriented": (1, 8, 7),
    "underlying": (1, 8, 8),
}


def _parse_n_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _parse_t_range(text: str) -> tuple[int, int | None]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), (None if hi == "n" else int(hi))
    if text == "n":
        raise ValueError("t lower bound must be a number")
    v = int(text)
    return v, v


def _parse_shard(text: str) -> tuple[int, int]:
    i, k = text.split("/", 1)
    return int(i), int(k)


def _check_gen_bounds(label: str, n: int, heavy: bool):
    n_min, n_max, heavy_over = GEN_BOUNDS[label]
    if not n_min <= n <= n_max:
        raise SwitchDeckError(f"{label} generation supports {n_min}..{n_max}")
    if n > heavy_over and not heavy:
        raise HeavyFlagRequired(
            f"{label} at order {n} needs --heavy (above {heavy_over})"
        )


def _gen_stream(label: str, n: int) -> Iterable[str]:
    if label == "paths":
        return (format_digraph6(g) for g in generate.gen_oriented_paths(n))
    if label == "cycles":
        return (format_digraph6(g) for g in generate.gen_oriented_cycles(n))
    if label == "digon-cycles":
        return (format_digraph6(g) for g in generate.gen_oriented_cycles(n, digons=True))
    if label == "maxdeg2":
        return (format_digraph6(g) for g in generate.gen_oriented_maxdeg2(n))
    if label == "tournaments":
        return (format_digraph6(g) for g in generate.gen_tournaments(n))
    if label == "all-oriented":
        return (format_digraph6(g) for g in generate.gen_all_oriented(n))
    # underlying graphs stream as their symmetric digraphs (all edges digons)
    return (format_digraph6(Digraph(u.n, u.adj))
            for u in generate.gen_underlying_graphs(n))


def _gen_count(label: str, n: int) -> int:
    if label == "paths":
        return spaces.PathSpace(n).count()
    if label == "cycles":
        return spaces.CycleSpace(n).count()
    if label == "digon-cycles":
        return spaces.CycleSpace(n, digons=True).count()
    if label == "maxdeg2":
        return census._maxdeg2_class_count(n)
    return sum(1 for _ in _gen_stream(label, n))


def _cmd_gen(args) -> int:
    _check_gen_bounds(args.graph_class, args.n, args.heavy)
    if args.count:
        print(_gen_count(args.graph_class, args.n))
        return EXIT_OK
    for line in _gen_stream(args.graph_class, args.n):
        print(line)
    return EXIT_OK


def _cmd_deck(args) -> int:
    g = parse_digraph6(args.digraph6)
    d = decks.t_deck(g, args.t)
    out = decks.format_deck(d)
    if out:
        print(out)
    return EXIT_OK


def _cmd_families(args) -> int:
    threads = args.threads if args.threads else int(os.environ.get("THREADS", "1"))
    report = run_census(
        args.graph_class,
        _parse_n_range(args.n_range),
        _parse_t_range(args.t_range),
        heavy=args.heavy,
        threads=threads,
        shard=_parse_shard(args.shard) if args.shard else None,
    )
    if args.json:
        print(report.to_json())
    else:
        for line in report.summary_lines():
            print(line)
    return EXIT_OK


def _cmd_stable(args) -> int:
    lo, hi = _parse_n_range(args.n_range)
    if hi > 7 and not args.heavy:
        raise HeavyFlagRequired("stable classification above order 7 needs --heavy")
    total = 0
    for n in range(lo, hi + 1):
        for g in classify_stable_connected(n):
            print(format_digraph6(g))
            total += 1
    print(f"stable connected: {total}", file=sys.stderr)
    return EXIT_OK


def _cmd_gamma(args) -> int:
    g = parse_digraph6(args.digraph6)
    gam = gamma_group(g)
    aut = [p for p in gam if apply_perm(g, p) == g]
    print(f"aut={len(aut)} gamma={gam.order} w-pairs={gam.order // len(aut)}")
    for p in gam:
        tag = "aut+switch" if apply_perm(g, p) == g else "switch"
        print(" ".join(str(v) for v in p.image) + f"  [{tag}]")
    return EXIT_OK


def _cmd_cycles(args) -> int:
    co = CycleOrientation.from_letters(args.letters)
    rs = [args.rotation] if args.rotation is not None else list(range(1, co.n))
    for r in rs:
        rot = Rotation(co.n, r)
        w = find_W(co, rot)
        if w is None:
            print(f"r={r} W=none")
            continue
        members = ",".join(str(v) for v in w.members())
        dists = ",".join(str(d) for d in sorted(dist_set(co, rot)))
        print(f"r={r} W={{{members}}} dist={{{dists}}}")
        if args.size_check:
            res = verify_w_size_reconstruction(co, rot)
            print(f"r={r} size-check |W|={res['w_size']} "
                  f"reconstructed={res['reconstructed']} holds={res['holds']}")
    return EXIT_OK


def _cmd_verify_figures(args) -> int:
    rows = catalog.verify_corpus()
    width = max(len(name) for name, _, _ in rows)
    failed = 0
    for name, ok, detail in rows:
        status = "ok " if ok else "FAIL"
        print(f"{status} {name.ljust(width)}  {detail}")
        failed += 0 if ok else 1
    print(f"{len(rows) - failed}/{len(rows)} figure groups verified")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def _cmd_merge(args) -> int:
    reports = []
    for path in args.files:
        with open(path, "r", encoding="utf-8") as fh:
            reports.append(SearchReport.from_json(fh.read()))
    print(merge_reports(reports).to_json())
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchdeck",
        description="Digraph switching decks: enumeration, censuses, reconstruction checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="stream one graph class as digraph6 lines")
    p.add_argument("graph_class", choices=sorted(GEN_BOUNDS))
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true", help="print only the class count")
    p.add_argument("--heavy", action="store_true",
                   help="allow orders above the default ceiling")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("deck", help="print the t-deck of a digraph6 graph")
    p.add_argument("digraph6")
    p.add_argument("-t", type=int, default=0)
    p.set_defaults(func=_cmd_deck)

    p = sub.add_parser("families", help="exhaustive t-deck family census")
    p.add_argument("graph_class", choices=sorted(CLASS_BOUNDS))
    p.add_argument("n_range", help="orders, e.g. 3..8 or 8")
    p.add_argument("t_range", nargs="?", default="0",
                   help="deck variants, e.g. -1..n or 0 (default 0)")
    p.add_argument("--heavy", action="store_true",
                   help="allow orders above the default ceiling")
    p.add_argument("--json", action="store_true",
                   help="emit the report as JSON instead of a summary")
    p.add_argument("--threads", type=int, default=0,
                   help="worker threads (default: THREADS env var or 1)")
    p.add_argument("--shard", help="i/k: run only every k-th work unit")
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("stable", help="connected switching-stable oriented graphs")
    p.add_argument("n_range", help="orders, e.g. 1..7")
    p.add_argument("--heavy", action="store_true",
                   help="allow orders above the default ceiling")
    p.set_defaults(func=_cmd_stable)

    p = sub.add_parser("gamma", help="switch-isomorphism group of a connected digraph")
    p.add_argument("digraph6")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("cycles", help="switching sets realizing cycle rotations")
    p.add_argument("letters", help="cycle orientation, e.g. FFBFB (D = digon)")
    p.add_argument("--rotation", type=int,
                   help="single rotation r (default: every nontrivial r)")
    p.add_argument("--size-check", action="store_true",
                   help="also reconstruct |W| from the cards")
    p.set_defaults(func=_cmd_cycles)

    p = sub.add_parser("verify-figures", help="re-check the reference corpus")
    p.set_defaults(func=_cmd_verify_figures)

    p = sub.add_parser("merge", help="combine shard reports (JSON files)")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=_cmd_merge)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # keep argparse from reading "-1..n" style range values as option flags
    argv = [" " + a if len(a) > 1 and a[0] == "-" and a[1].isdigit() else a
            for a in argv]
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HeavyFlagRequired as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HEAVY
    except CardAbsent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CARD
    except DichotomyViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DICHOTOMY
    except (SwitchDeckError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
