import json

from zirkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_family_profile(capsys):
    code, out, _ = run_cli(capsys, "compute", "--family", "h_rs:3,5",
                           "--params", "zir,Z,Zbar,ZIR", "--witness")
    assert code == 0
    row = json.loads(out.strip())
    assert (row["zir"], row["Z"], row["Zbar"], row["ZIR"]) == (2, 3, 4, 5)
    assert set(row["witnesses"]) == {"zir", "Z", "Zbar", "ZIR"}


def test_compute_graph6_csv(capsys):
    code, out, _ = run_cli(capsys, "compute", "--graph6", "D?{",
                           "--params", "Z,gamma", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph,n,Z,gamma"
    assert lines[1].startswith("D?{,5,")


def test_compute_file_input(capsys, tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("# two graphs\nA_\nD?{\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "compute", "--file", str(path), "--params", "Z")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert [r["graph"] for r in rows] == ["A_", "D?{"]


def test_compute_check_bounds_flag(capsys):
    code, out, _ = run_cli(capsys, "compute", "--family", "necklace:2",
                           "--check-bounds")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    profile_rows = [r for r in rows if "check" not in r]
    check_rows = [r for r in rows if "check" in r]
    assert len(profile_rows) == 1 and check_rows
    assert {r["status"] for r in check_rows} <= {"pass", "skip"}
    assert any(r["check"] == "chain" for r in check_rows)


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "zirkit", "compute", "--family", "cycle:5",
         "--params", "Z"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout.strip())["Z"] == 2


def test_compute_rejects_two_sources(capsys):
    code, _, err = run_cli(capsys, "compute", "--graph6", "A_", "--family", "path:3")
    assert code == 2 and "exactly one" in err


def test_compute_unknown_family_exit_two(capsys):
    code, _, err = run_cli(capsys, "compute", "--family", "zigzag:3")
    assert code == 2 and "unknown family" in err


def test_compute_malformed_graph6_exit_two(capsys):
    code, _, err = run_cli(capsys, "compute", "--graph6", "F?????")
    assert code == 2 and "graph6" in err.lower()


def test_forts_minimal_cycle(capsys):
    code, out, _ = run_cli(capsys, "forts", "--family", "cycle:5", "--minimal")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 5
    assert all(r["size"] == 3 for r in rows)


def test_table_default_passes(capsys):
    code, out, err = run_cli(capsys, "table", "--format", "csv")
    assert code == 0
    assert "MISMATCH" not in out
    assert "0 mismatch(es)" in err


def test_table_custom_specs(capsys):
    code, out, _ = run_cli(capsys, "table", "--specs", "cycle:6;path:7",
                           "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert {r["spec"] for r in rows} == {"cycle:6", "path:7"}
    assert all(r["ok"] for r in rows)


def test_table_csv_parses_with_quoted_specs(capsys):
    import csv as csv_module
    import io
    code, out, _ = run_cli(capsys, "table", "--specs",
                           "complete_bipartite:2,3", "--format", "csv")
    assert code == 0
    rows = list(csv_module.reader(io.StringIO(out)))
    assert rows[0] == ["spec", "graph6", "n", "param", "expected",
                       "computed", "status"]
    assert all(r[0] == "complete_bipartite:2,3" for r in rows[1:])
    assert {r[3] for r in rows[1:]} == {"zir", "Z", "Zbar", "ZIR"}


def test_survey_run_and_exit_zero(capsys):
    code, out, err = run_cli(capsys, "survey", "--order", "4",
                             "--checks", "chain,zir1-characterization")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert all(l["status"] in ("pass", "info") for l in lines)
    assert "chain" in err


def test_survey_threads_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "survey", "--order", "4")
    code2, out2, _ = run_cli(capsys, "survey", "--order", "4", "--threads", "2")
    assert code1 == code2 == 0
    assert sorted(out1.splitlines()) == sorted(out2.splitlines())


def test_survey_budget_exit_two(capsys):
    code, _, err = run_cli(capsys, "survey", "--order", "7")
    assert code == 2 and "budget" in err


def test_survey_order7_with_override_accepted():
    # only checks argument validation, not a full run
    from zirkit.survey import survey
    from zirkit.errors import BudgetError
    try:
        survey(7, checks=("chain",), override_budget=False)
    except BudgetError as exc:
        assert "override" in str(exc)


def test_convert_round_trip(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "convert", "--family", "cycle:4", "--to", "edges")
    assert code == 0
    path = tmp_path / "c4.edges"
    path.write_text(out, encoding="utf-8")
    code, out2, _ = run_cli(capsys, "convert", "--edges", str(path), "--to", "graph6")
    assert code == 0
    code, out3, _ = run_cli(capsys, "convert", "--graph6", out2.strip(), "--to", "edges")
    assert code == 0
    assert [l for l in out.splitlines() if not l.startswith("#")] == \
        [l for l in out3.splitlines() if not l.startswith("#")]


def test_convert_missing_file_exit_two(capsys):
    code, _, err = run_cli(capsys, "convert", "--edges", "/nonexistent/x.edges",
                           "--to", "graph6")
    assert code == 2 and err


def test_printed_witnesses_reverify(capsys):
    # feed the CLI output back into the predicates it claims to satisfy
    from zirkit.families import generate
    from zirkit.forcing import closure, is_minimal_zfs, is_zero_forcing_set
    from zirkit.graphs import bits, mask_of
    from zirkit.irredundance import is_maximal_zir_set

    for expr in ("cycle:6", "h_rs:2,3", "fig7"):
        code, out, _ = run_cli(capsys, "compute", "--family", expr,
                               "--params", "zir,Z,Zbar,ZIR,gamma,gamma2,alpha,gammaP",
                               "--witness")
        assert code == 0
        row = json.loads(out.strip())
        g = generate(expr)
        wit = {k: mask_of(v) for k, v in row["witnesses"].items()}
        assert is_zero_forcing_set(g, wit["Z"])
        assert is_minimal_zfs(g, wit["Zbar"])
        assert is_maximal_zir_set(g, wit["zir"])
        assert is_maximal_zir_set(g, wit["ZIR"])
        for k, need in (("gamma", 1), ("gamma2", 2)):
            outside = g.full & ~wit[k]
            assert all((g.adj[v] & wit[k]).bit_count() >= need for v in bits(outside))
        assert all(not g.adj[v] & wit["alpha"] for v in bits(wit["alpha"]))
        seed = wit["gammaP"]
        for v in bits(wit["gammaP"]):
            seed |= g.adj[v]
        assert closure(g, seed) == g.full


def test_table_mismatch_exit_one(capsys, monkeypatch):
    import zirkit.cli as cli
    from zirkit.tables import TableRow

    def fake_table(specs=None, max_order=15, time_limit=None):
        return [TableRow(spec="cycle:6", graph6="E", n=6, param="ZIR",
                         expected=3, computed=4)]

    monkeypatch.setattr(cli, "family_table", fake_table)
    code, out, err = run_cli(capsys, "table")
    assert code == 1
    assert "MISMATCH" in out and "1 mismatch(es)" in err


def test_survey_failure_exit_one(capsys, monkeypatch):
    import zirkit.cli as cli
    from zirkit.profiles import CheckReport
    from zirkit.survey import SurveyReport

    def fake_survey(order, **kwargs):
        report = SurveyReport(max_order=order, connected_only=False,
                              dedup=False, checks=("chain",))
        report.reports.append(CheckReport("chain", "order 2", "fail", "boom"))
        return report

    monkeypatch.setattr(cli, "survey", fake_survey)
    code, _, _ = run_cli(capsys, "survey", "--order", "2")
    assert code == 1


def test_time_limit_exceeded_exit_two(capsys):
    code, _, err = run_cli(capsys, "survey", "--order", "5",
                           "--time-limit", "0.0001")
    assert code == 2 and "time limit" in err
