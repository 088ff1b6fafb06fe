import json
from pathlib import Path

import pytest

from ptfree.cli import main
from ptfree.generators import GenSpec, gen
from ptfree.graph import parse_graph, write_graph

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("golden", sorted(GOLDEN.glob("*.json")), ids=lambda p: p.stem)
def test_golden_reports(golden, capsys, monkeypatch):
    monkeypatch.chdir(DATA)
    spec = json.loads(golden.read_text())
    code, out, _ = run(capsys, spec["argv"])
    report = json.loads(out)
    assert isinstance(report.pop("wall_ms"), float)
    assert code == spec["exit"]
    assert report == spec["report"]


def test_repeat_runs_identical(capsys, monkeypatch):
    monkeypatch.chdir(DATA)
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, ["solve", "cost3col", "--input", "c5_annotated.col"])
        doc = json.loads(out)
        doc.pop("wall_ms")
        outs.append(json.dumps(doc))
    assert outs[0] == outs[1]


def test_mwis_weight_c5(capsys):
    code, out, _ = run(capsys, ["solve", "mwis", "--t", "5", "--input", str(DATA / "c5.col")])
    assert code == 0
    assert json.loads(out)["answer"]["weight"] == 2


def test_check_ptfree_witness(capsys):
    code, out, _ = run(capsys, ["check-ptfree", "--t", "4", "--input", str(DATA / "c5.col")])
    answer = json.loads(out)["answer"]
    assert code == 0 and answer["pt_free"] is False and len(answer["certificate"]) == 4


def test_not_pt_free_exit(capsys):
    code, out, _ = run(capsys, ["solve", "mwis", "--t", "5", "--input", str(DATA / "p5.col")])
    assert code == 2
    assert json.loads(out)["error"]["certificate"] == [1, 2, 3, 4, 5]


def test_stats_file_and_text_answer(capsys, tmp_path):
    stats = tmp_path / "stats.json"
    code, out, _ = run(
        capsys, ["solve", "list3col", "--input", str(DATA / "c5.col"), "--stats", str(stats)]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5 and all(l.startswith("v ") for l in lines)
    report = json.loads(stats.read_text())
    assert report["stats"]["calls"] >= 1


def test_infeasible_token(capsys, tmp_path):
    f = tmp_path / "k4.col"
    f.write_text("p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
    code, out, _ = run(capsys, ["solve", "oct", "--input", str(f), "--stats", str(tmp_path / "s")])
    assert code == 0 and out.strip() == "INFEASIBLE"


@pytest.mark.parametrize("target", ["mwis", "list3col", "cost3col", "oct", "induced-matching"])
def test_oracle_agrees_with_solver(target, capsys):
    path = str(DATA / "c5_annotated.col")
    _, solved, _ = run(capsys, ["solve", target, "--input", path])
    _, oracle, _ = run(capsys, ["oracle", target, "--input", path])
    a, b = json.loads(solved)["answer"], json.loads(oracle)["answer"]
    for key in ("weight", "feasible", "cost"):
        assert a.get(key) == b.get(key)


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, [])[0] == 1
    assert run(capsys, ["solve", "nope", "--input", "x"])[0] == 1
    assert run(capsys, ["solve", "mwis", "--input", str(tmp_path / "missing.col")])[0] == 1
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 1\n")
    code, _, err = run(capsys, ["solve", "mwis", "--input", str(bad)])
    assert code == 1 and "line 2" in err
    assert run(capsys, ["solve", "list3col", "--t", "12", "--input", str(DATA / "c5.col")])[0] == 1
    assert run(capsys, ["gen", "--kind", "cycle", "--n", "9", "--t", "5"])[0] == 1


def test_separator_disconnected_exit_3(capsys, tmp_path):
    f = tmp_path / "two.col"
    f.write_text("p edge 4 2\ne 1 2\ne 3 4\n")
    code, out, _ = run(capsys, ["separator", "--input", str(f)])
    assert code == 3
    assert json.loads(out)["error"]["kind"] == "invariant_violation"


def test_gen_writes_file(capsys, tmp_path):
    out = tmp_path / "g.col"
    argv = ["gen", "--kind", "chord-repair", "--n", "10", "--p", "0.3", "--t", "5", "--seed", "1", "--out", str(out)]
    assert run(capsys, argv)[0] == 0
    expected = gen(GenSpec("chord-repair", n=10, p=0.3, t=5, seed=1))
    assert parse_graph(out.read_text()) == expected
    code, text, _ = run(capsys, ["gen", "--kind", "complete-multipartite", "--parts", "2,2,2", "--t", "4"])
    assert code == 0 and text.startswith("p edge 6 12")


def test_bench(capsys, tmp_path):
    for seed in range(10):
        g = gen(GenSpec("chord-repair", n=12, p=0.2, t=5, seed=seed))
        (tmp_path / f"i{seed:02d}.col").write_text(write_graph(g))
    (tmp_path / "zz_bad.col").write_text((DATA / "p5.col").read_text())
    code, out, _ = run(capsys, ["bench", "--corpus", str(tmp_path), "--t", "5", "--repetitions", "2"])
    assert code == 0
    report = json.loads(out)
    assert len(report["rows"]) == 11
    assert report["rows"][-1]["status"] == "not_pt_free"
    assert report["summary"]["solved"] == 10 and report["summary"]["failed"] == 1
    assert all(isinstance(r["calls"], int) for r in report["rows"][:10])


def test_bench_empty(capsys, tmp_path):
    code, out, _ = run(capsys, ["bench", "--corpus", str(tmp_path)])
    assert code == 0
    report = json.loads(out)
    assert report["rows"] == [] and report["summary"]["instances"] == 0
