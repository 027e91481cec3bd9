import json
import pathlib

import pytest

from greedyext.cli import run_cli

DATA = pathlib.Path(__file__).parent.parent / "data"

FIG3 = str(DATA / "fig3.poset")
NFILE = str(DATA / "n.poset")
CHAIN3 = str(DATA / "chain3.poset")


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_greedy_count_fig3(capsys):
    code, out, _ = run(capsys, "greedy", "count", FIG3)
    assert code == 0
    assert out.strip() == "11"


def test_greedy_count_formula_agreement(capsys):
    code, out, _ = run(capsys, "greedy", "count", FIG3, "--method", "both")
    assert code == 0
    assert "agreement: yes" in out


def test_greedy_enum(capsys):
    code, out, _ = run(capsys, "greedy", "enum", NFILE)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("a c b d") and "jumps=2" in lines[0]


def test_greedy_enum_limit_exceeded(capsys, tmp_path):
    f = tmp_path / "anti.poset"
    f.write_text("poset 5\n")
    code, _, err = run(capsys, "greedy", "enum", str(f), "--limit", "3")
    assert code == 4
    assert "cap" in err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", FIG3)
    assert code == 0
    assert "n: 5" in out
    assert "width: 3" in out
    assert "is_n_free: False" in out
    assert "{0,1,2,3} {4}" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", NFILE, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["n_witness"] == [0, 1, 2, 3]
    assert doc["results"]["width"] == 2


def test_balance_fig3(capsys):
    code, out, _ = run(capsys, "balance", FIG3, "--alpha", "1/3")
    assert code == 0
    assert "pair b<a" not in out  # pairs listed with x-index < y-index
    assert "pair a<b: 3/11 (3 of 11)" in out
    assert "alpha 1/3:" in out


def test_balance_json_exact(capsys):
    code, out, _ = run(capsys, "balance", NFILE, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["best_level"] == "1/3"


def test_balance_all_extensions(capsys):
    code, out, _ = run(capsys, "balance", NFILE, "--all-extensions", "--json")
    assert code == 0
    doc = json.loads(out)
    totals = {row["total"] for row in doc["results"]["pairs"]}
    assert totals == {5}  # the N has 5 linear extensions


def test_witness_chain_exit_3(capsys):
    code, _, err = run(capsys, "witness", CHAIN3)
    assert code == 3
    assert "chain" in err


def test_witness_n_exit_3(capsys):
    code, _, err = run(capsys, "witness", NFILE)
    assert code == 3
    assert "contains an N" in err


def test_witness_ok(capsys, tmp_path):
    f = tmp_path / "p.poset"
    f.write_text("poset 3\ncover 0 1\n")
    code, out, _ = run(capsys, "witness", str(f), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["ratio"] == "1/2"
    assert sorted(doc["results"]["pair"]) == [1, 2]


def test_cycle_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.poset"
    f.write_text("poset 2\ncover 0 1\ncover 1 0\n")
    code, _, err = run(capsys, "analyze", str(f))
    assert code == 2
    assert "cycle" in err


def test_syntax_error_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.poset"
    f.write_text("posets 2\n")
    code, _, err = run(capsys, "analyze", str(f))
    assert code == 2


def test_usage_exit_1(capsys):
    code, _, _ = run(capsys, "no-such-command")
    assert code == 1


def test_gen_expr_and_round_trip(capsys, tmp_path):
    out_file = tmp_path / "sp.poset"
    code, _, _ = run(capsys, "gen", "expr", "dis(chain(1),chain(2))", "-o", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "greedy", "count", str(out_file))
    assert code == 0 and out.strip() == "2"


def test_gen_deterministic(capsys):
    code, out1, _ = run(capsys, "gen", "sp", "--n", "7", "--seed", "5")
    code2, out2, _ = run(capsys, "gen", "sp", "--n", "7", "--seed", "5")
    assert code == code2 == 0
    assert out1 == out2


def test_gen_nfree(capsys, tmp_path):
    out_file = tmp_path / "nf.poset"
    code, _, _ = run(capsys, "gen", "nfree", "--n", "6", "--seed", "3", "-o", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "analyze", str(out_file))
    assert "is_n_free: True" in out


def test_gen_bad_size_exit_3(capsys):
    code, _, _ = run(capsys, "gen", "sp", "--n", "0", "--seed", "1")
    assert code == 3


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "fig3")
    assert code == 0
    assert out.count("PASS") == 4
    assert "FAIL" not in out


def test_verify_small_suite_options(capsys):
    code, out, _ = run(capsys, "verify", "disjoint-sum", "--instances", "5", "--seed", "2")
    assert code == 0
    assert "PASS" in out


def test_sweep_width2_small(capsys):
    code, out, _ = run(capsys, "sweep", "width2", "--max-n", "4")
    assert code == 0
    assert "min_best_level: 1/3" in out
    assert "below 1/3: none" in out


def test_plots_written(capsys, tmp_path):
    hasse = tmp_path / "hasse.png"
    bars = tmp_path / "bars.png"
    code, _, _ = run(capsys, "analyze", FIG3, "--plot", str(hasse))
    assert code == 0 and hasse.stat().st_size > 0
    code, _, _ = run(capsys, "balance", NFILE, "--plot", str(bars))
    assert code == 0 and bars.stat().st_size > 0


def test_determinism_same_argv(capsys):
    code1, out1, _ = run(capsys, "balance", FIG3)
    code2, out2, _ = run(capsys, "balance", FIG3)
    assert (code1, out1) == (code2, out2)
