"""Command-line interface: subcommands, exit codes, and output shapes."""

from __future__ import annotations

import json

import pytest

from switchdeck import cli
from switchdeck.digraph import parse_digraph6
from switchdeck.report import SearchReport


def run(capsys, *argv: str) -> tuple[int, str, str]:
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_gen_streams_distinct_parseable_lines(capsys):
    rc, out, _ = run(capsys, "gen", "paths", "4")
    assert rc == cli.EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 4 and len(set(lines)) == 4
    for line in lines:
        assert parse_digraph6(line).n == 4


def test_gen_count_flag(capsys):
    rc, out, _ = run(capsys, "gen", "maxdeg2", "8", "--count")
    assert rc == cli.EXIT_OK and out.strip() == "430"
    rc, out, _ = run(capsys, "gen", "tournaments", "6", "--count")
    assert rc == cli.EXIT_OK and out.strip() == "56"


def test_gen_bounds_and_heavy_gate(capsys):
    rc, _, err = run(capsys, "gen", "underlying", "9")
    assert rc == cli.EXIT_USAGE and "error:" in err
    rc, _, err = run(capsys, "gen", "cycles", "21")
    assert rc == cli.EXIT_HEAVY and "heavy" in err


def test_deck_output(capsys):
    rc, out, _ = run(capsys, "deck", "&@?")
    assert rc == cli.EXIT_OK and out.strip() == "&@? x1"
    rc, out, _ = run(capsys, "deck", "&BP_")
    assert rc == cli.EXIT_OK and out.strip() == "&BCo x3"


def test_deck_missing_own_card(capsys):
    rc, _, err = run(capsys, "deck", "&BP_", "-t", "-1")
    assert rc == cli.EXIT_CARD and "error:" in err


def test_deck_malformed_input(capsys):
    rc, _, err = run(capsys, "deck", "not-digraph6")
    assert rc == cli.EXIT_USAGE and "error:" in err


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_families_summary_output(capsys):
    rc, out, _ = run(capsys, "families", "paths", "1..8", "-1..n")
    assert rc == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "class=paths n=1..8 t=-1..n"
    assert "n=5 t=-1 size=2: &D??QI? &D?I?W?" in lines
    assert "families: n=3:1, n=4:2, n=5:1" in lines
    assert lines[-1].startswith("elapsed:")


def test_families_json_round_trips(capsys):
    rc, out, _ = run(capsys, "families", "cycles", "3..8", "-1..n", "--json")
    assert rc == cli.EXIT_OK
    data = json.loads(out)
    assert set(data) == {"class", "n_range", "t_range", "families",
                         "counts", "elapsed_ms"}
    report = SearchReport.from_json(out)
    assert len(report.families) == 13
    assert report.counts[8] == 22


def test_families_range_errors(capsys):
    rc, _, err = run(capsys, "families", "paths", "8..3")
    assert rc == cli.EXIT_USAGE and "error:" in err
    rc, _, err = run(capsys, "families", "cycles", "3..21")
    assert rc == cli.EXIT_HEAVY


def test_families_shard_merge(capsys, tmp_path):
    paths = []
    for i in range(2):
        rc, out, _ = run(capsys, "families", "cycles", "3..8", "0..n",
                         "--json", "--shard", f"{i}/2")
        assert rc == cli.EXIT_OK
        path = tmp_path / f"shard{i}.json"
        path.write_text(out)
        paths.append(str(path))
    rc, merged_out, _ = run(capsys, "merge", *paths)
    assert rc == cli.EXIT_OK
    merged = SearchReport.from_json(merged_out)
    rc, whole_out, _ = run(capsys, "families", "cycles", "3..8", "0..n",
                           "--json")
    whole = SearchReport.from_json(whole_out)
    assert sorted(f.members for f in merged.families) == \
        sorted(f.members for f in whole.families)
    assert merged.counts == whole.counts


def test_merge_rejects_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    rc, _, err = run(capsys, "merge", str(bad))
    assert rc == cli.EXIT_USAGE and "error:" in err


def test_stable_subcommand(capsys):
    rc, out, err = run(capsys, "stable", "1..7")
    assert rc == cli.EXIT_OK
    assert out.split() == ["&@?", "&AO", "&CWOG"]
    assert "stable connected: 3" in err
    rc, _, err = run(capsys, "stable", "1..8")
    assert rc == cli.EXIT_HEAVY


def test_gamma_subcommand(capsys):
    rc, out, _ = run(capsys, "gamma", "&AO")
    lines = out.splitlines()
    assert lines[0] == "aut=1 gamma=2 w-pairs=2"
    assert len(lines) == 3
    assert any(line.endswith("[aut+switch]") for line in lines[1:])
    rc, out, _ = run(capsys, "gamma", "&CWOG")
    assert out.splitlines()[0] == "aut=1 gamma=8 w-pairs=8"


def test_cycles_subcommand(capsys):
    rc, out, _ = run(capsys, "cycles", "FFFB", "--rotation", "1")
    assert rc == cli.EXIT_OK and out.strip() == "r=1 W={0} dist={}"
    rc, out, _ = run(capsys, "cycles", "FBFB", "--rotation", "1")
    assert out.strip() == "r=1 W=none"
    rc, out, _ = run(capsys, "cycles", "B" + "F" * 14,
                     "--rotation", "2", "--size-check")
    lines = out.splitlines()
    assert lines[0] == "r=2 W={1,2} dist={1}"
    assert lines[1] == "r=2 size-check |W|=2 reconstructed=2 holds=True"


def test_cycles_scans_all_rotations_by_default(capsys):
    rc, out, _ = run(capsys, "cycles", "FFFFF")
    lines = out.splitlines()
    assert len(lines) == 4  # rotations 1..4
    assert all(line.endswith("W={} dist={}") for line in lines)


def test_verify_figures(capsys):
    rc, out, _ = run(capsys, "verify-figures")
    assert rc == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[-1] == "13/13 figure groups verified"
    assert all(line.startswith("ok ") for line in lines[:-1])


def test_families_output_is_deterministic(capsys):
    def stable_lines(text: str) -> list[str]:
        return [l for l in text.splitlines() if not l.startswith("elapsed:")]

    _, first, _ = run(capsys, "families", "maxdeg2", "1..8")
    _, second, _ = run(capsys, "families", "maxdeg2", "1..8")
    assert stable_lines(first) == stable_lines(second)
