import io
import math

import pytest

from cliquekernel import bench
from cliquekernel.bench import (
    HEADER,
    BenchRecord,
    amdahl_speedup,
    format_speedups,
    parallel_fraction,
    read_csv,
    run_graph,
    run_single,
    write_csv,
)
from cliquekernel.cli import main
from cliquekernel.dominance import DominanceRule
from cliquekernel.generator import GenSpec, generate
from cliquekernel.graph import complete_graph
from cliquekernel.io import GraphFormatError, save_matrix


def test_amdahl():
    assert amdahl_speedup(0.95, 1e6) == pytest.approx(20, abs=1e-3)
    for p in (0.0, 0.5, 1.0):
        assert amdahl_speedup(p, 1) == 1.0
    assert amdahl_speedup(0.0, 64) == 1.0
    assert amdahl_speedup(1.0, 8) == 8.0
    for p, n in [(-0.1, 2), (1.5, 2), (0.5, 0)]:
        with pytest.raises(ValueError):
            amdahl_speedup(p, n)


def test_parallel_fraction_inverts_amdahl():
    s = amdahl_speedup(0.8, 4)
    assert math.isclose(parallel_fraction(s, 4), 0.8)
    assert parallel_fraction(2.0, 1) is None


def test_csv_round_trip(tmp_path):
    recs = [
        BenchRecord("SERIAL DOM. ALG-1", 100, 4750, 12, 3, 0.25),
        BenchRecord("PARALLEL EdgeDom v1", 300, 44250, 0, 0, 1.5),
    ]
    path = tmp_path / "deep" / "out.csv"
    write_csv(recs, path)
    assert path.read_text().splitlines()[0] == ",".join(HEADER)
    assert "0.250000" in path.read_text()
    assert read_csv(path) == recs


def test_read_csv_checks_header(tmp_path):
    path = tmp_path / "x.csv"
    path.write_text("a,b\n")
    with pytest.raises(ValueError):
        read_csv(path)


def test_run_single_generated(tmp_path):
    out = io.StringIO()
    recs = run_single(100, 4750, output_path=tmp_path / "r.csv", workers=2, out=out)
    assert len(recs) == 6
    assert all(r.vertex_count == 100 and r.edge_count == 4750 for r in recs)
    assert [r.process_type for r in recs][:2] == ["SERIAL EdgeDom v1", "PARALLEL EdgeDom v1"]
    assert read_csv(tmp_path / "r.csv") == [BenchRecord.from_row(r.to_row()) for r in recs]
    assert "ProcessType" in out.getvalue() and "Speedup" in out.getvalue()


def test_run_single_complete_graph(tmp_path):
    path = tmp_path / "k5.txt"
    save_matrix(complete_graph(5), path)
    recs = run_single(5, str(path), output_path=tmp_path / "r.csv", workers=2, out=None)
    assert all(r.deleted_edges == 0 and r.deleted_vertices == 0 for r in recs)


def test_run_single_dimension_mismatch(tmp_path):
    path = tmp_path / "k4.txt"
    save_matrix(complete_graph(4), path)
    with pytest.raises(GraphFormatError, match="dimension"):
        run_single(5, str(path), output_path=tmp_path / "r.csv", out=None)


def test_runs_do_not_contaminate_each_other():
    g = generate(GenSpec(60, 800, 3))
    before = g.copy()
    a = run_graph(g, 2)
    assert g == before
    b = run_graph(g, 2)
    assert [(r.deleted_edges, r.deleted_vertices) for r in a] == [(r.deleted_edges, r.deleted_vertices) for r in b]


def test_oracle_check_and_rule_filter():
    g = generate(GenSpec(14, 40, 5))
    recs = run_graph(g, 2, rules=[DominanceRule.VERTEX_DOM], oracle_check=True)
    assert [r.process_type for r in recs] == ["SERIAL DOM. ALG-1", "PARALLEL DOM. ALG-1"]


def test_speedup_table_skips_unpaired_rows():
    recs = [
        BenchRecord("SERIAL DOM. ALG-1", 10, 20, 0, 0, 2.0),
        BenchRecord("PARALLEL DOM. ALG-1", 10, 20, 0, 0, 1.0),
        BenchRecord("PARALLEL DOM. ALG-2", 10, 20, 0, 0, 1.0),
    ]
    lines = format_speedups(recs, 4).splitlines()
    assert len(lines) == 2 and "2.00" in lines[1] and "0.667" in lines[1]


def test_suite_uses_existing_inputs(tmp_path):
    inputs = tmp_path / "in"
    inputs.mkdir()
    for n in (12, 8):
        save_matrix(generate(GenSpec(n, 2 * n, n)), inputs / f"g{n}.txt")
    recs = bench.run_suite(inputs, tmp_path / "out.csv", workers=2, out=None)
    assert [r.vertex_count for r in recs] == [8] * 6 + [12] * 6


# command line ---------------------------------------------------------------


def test_cli_single(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code = main(["20", "60", "--output", str(out), "--workers", "2", "--rules", "alg1,alg2", "--oracle-check"])
    assert code == 0
    recs = read_csv(out)
    assert len(recs) == 4 and all(r.edge_count == 60 for r in recs)
    assert "DOM. ALG-2" in capsys.readouterr().out


def test_cli_file(tmp_path):
    path = tmp_path / "k5.txt"
    save_matrix(complete_graph(5), path)
    assert main(["5", str(path), "--output", str(tmp_path / "r.csv")]) == 0
    assert main(["6", str(path), "--output", str(tmp_path / "r.csv")]) == 1


@pytest.mark.parametrize(
    "argv",
    [["5"], ["5", "10", "7"], ["five", "10"], ["5", "10", "--workers", "0"], ["5", "10", "--rules", "bogus"]],
)
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["5", "3"], ["5", "11"], ["1", "0"], ["5", "missing.txt"]])
def test_cli_rejected_input(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == 1
    assert "dominate:" in capsys.readouterr().err
