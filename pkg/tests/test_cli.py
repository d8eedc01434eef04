import json
import math

import pytest

from yaospanner import graphs, load_graph
from yaospanner.cli import main
from yaospanner.pointio import read_points, write_points_csv
from yaospanner.constructions import lower_bound_y5

RHO = 2.0 + math.sqrt(3.0)


@pytest.fixture
def appendix_csv(tmp_path):
    path = tmp_path / "appendix.csv"
    write_points_csv(lower_bound_y5(), path)
    return path


def test_build_and_analyze_round_trip(tmp_path, appendix_csv, capsys):
    graph_path = tmp_path / "g.json"
    assert main(["build", "--input", str(appendix_csv), "--k", "5",
                 "--variant", "yao", "--output", str(graph_path)]) == 0
    g = load_graph(graph_path)
    assert g.n == 34

    report_path = tmp_path / "report.json"
    code = main(["analyze", "--graph", str(graph_path),
                 "--output", str(report_path)])
    out = capsys.readouterr().out
    assert code == 0
    assert "2.8766265" in out
    assert "witness: u-v" in out
    assert "yes" in out

    # in-memory analysis must produce the identical report
    report_path2 = tmp_path / "report2.json"
    assert main(["analyze", "--input", str(appendix_csv),
                 "--output", str(report_path2)]) == 0
    assert json.loads(report_path.read_text()) == json.loads(report_path2.read_text())


def test_build_single_point(tmp_path, capsys):
    src = tmp_path / "one.csv"
    src.write_text("x,y\n1,2\n")
    out = tmp_path / "one.json"
    assert main(["build", "--input", str(src), "--output", str(out)]) == 0
    assert load_graph(out).edges == ()


def test_build_yaoyao_subgraph(tmp_path, appendix_csv):
    yao_path = tmp_path / "yao.json"
    yy_path = tmp_path / "yy.json"
    assert main(["build", "--input", str(appendix_csv), "--output", str(yao_path)]) == 0
    assert main(["build", "--input", str(appendix_csv), "--variant", "yaoyao",
                 "--output", str(yy_path)]) == 0
    assert load_graph(yy_path).edge_set() <= load_graph(yao_path).edge_set()


def test_analyze_two_points(tmp_path, capsys):
    src = tmp_path / "two.json"
    src.write_text("[[0, 0], [1, 0]]")
    assert main(["analyze", "--input", str(src)]) == 0
    assert "max stretch: 1" in capsys.readouterr().out


def test_analyze_non_spanner_exit(tmp_path, capsys):
    pts = tmp_path / "yy5.json"
    assert main(["generate", "yy5", "--levels", "3", "--output", str(pts)]) == 0
    code = main(["analyze", "--input", str(pts), "--variant", "yaoyao",
                 "--rho", "3.74"])
    out = capsys.readouterr().out
    assert code == 2
    assert "no" in out.splitlines()[-1]


def test_analyze_disconnected(tmp_path, capsys):
    data = {
        "k": 5, "variant": "yao", "offset": 0.0,
        "points": [[0, 0], [1, 0], [50, 50], [51, 50]],
        "labels": {"0": "p", "2": "q"},
        "edges": [[0, 1], [2, 3]],
    }
    path = tmp_path / "disc.json"
    path.write_text(json.dumps(data))
    code = main(["analyze", "--graph", str(path)])
    out = capsys.readouterr().out
    assert code == 2
    assert "max stretch: inf" in out
    assert "unreachable pair: p-q" in out


def test_analyze_pairs_csv(tmp_path, appendix_csv):
    pairs = tmp_path / "pairs.csv"
    assert main(["analyze", "--input", str(appendix_csv),
                 "--pairs-csv", str(pairs)]) == 0
    lines = pairs.read_text().strip().splitlines()
    assert len(lines) == 1 + 34 * 33 // 2


def test_verify_constants(capsys, tmp_path):
    out_path = tmp_path / "constants.json"
    assert main(["verify", "constants", "--output", str(out_path)]) == 0
    assert "constants: PASS" in capsys.readouterr().out
    data = json.loads(out_path.read_text())
    assert data["name"] == "constants" and data["passed"]


def test_verify_fuzz_commands(capsys):
    assert main(["verify", "lemma1", "--samples", "5000"]) == 0
    assert main(["verify", "lemma2", "--samples", "5000"]) == 0
    assert main(["verify", "prop1", "--resolution", "200"]) == 0
    assert main(["verify", "induction", "--samples", "20000", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 4


def test_verify_all_writes_reports(tmp_path):
    out_path = tmp_path / "all.json"
    assert main(["verify", "all", "--samples", "4000", "--resolution", "150",
                 "--output", str(out_path)]) == 0
    data = json.loads(out_path.read_text())
    assert [rep["name"] for rep in data] == [
        "constants", "lemma1", "lemma2", "prop1", "induction"]


def test_generate_lower_bound(tmp_path, capsys):
    out = tmp_path / "lb.csv"
    assert main(["generate", "lower-bound", "--output", str(out)]) == 0
    ps = read_points(out)
    assert len(ps) == 34 and ps.label(0) == "u"


def test_generate_yy5_json(tmp_path):
    out = tmp_path / "yy5.json"
    assert main(["generate", "yy5", "--levels", "2", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["metadata"]["levels"] == 2
    assert len(data["points"]) == 22


def test_generate_yy5_invalid_scale_fails_loudly(tmp_path, capsys):
    out = tmp_path / "bad.json"
    code = main(["generate", "yy5", "--levels", "3", "--scale", "1.0",
                 "--output", str(out)])
    assert code == 1
    assert "self-validation failed" in capsys.readouterr().err
    assert not out.exists()


def test_render_svg(tmp_path, appendix_csv):
    graph_path = tmp_path / "g.json"
    main(["build", "--input", str(appendix_csv), "--output", str(graph_path)])
    svg_path = tmp_path / "fig.svg"
    assert main(["render", "--graph", str(graph_path), "--output", str(svg_path),
                 "--cones", "--witness"]) == 0
    svg = svg_path.read_text()
    assert svg.count("<circle") == 34
    assert svg.count('class="cone"') == 34 * 5
    assert svg.count("<polyline") == 1


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])  # missing --graph/--input
    assert exc.value.code == 64
    capsys.readouterr()
    assert main(["build", "--input", str(tmp_path / "missing.csv"),
                 "--output", str(tmp_path / "x.json")]) == 64
    assert "error" in capsys.readouterr().err
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n1,nope\n")
    assert main(["build", "--input", str(bad),
                 "--output", str(tmp_path / "x.json")]) == 64
    assert "line 2" in capsys.readouterr().err


def test_reproduce_quick(tmp_path, capsys):
    outdir = tmp_path / "report"
    assert main(["reproduce", "--outdir", str(outdir), "--quick",
                 "--levels", "3"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    report = json.loads((outdir / "report.json").read_text())
    assert all(c["passed"] for c in report["claims"])
    csv_text = (outdir / "report.csv").read_text()
    assert csv_text.splitlines()[0] == "section,name,value,bound,comparator,passed"
    for name in ("lower_bound_y5.png", "yy5_growth.png", "yy5_corridor.png",
                 "separation_sweep.png"):
        assert (outdir / "figures" / name).exists()
