from click.testing import CliRunner

from ksets.cli import main
from ksets.corpus import CORPUS_LINES


def invoke(*args):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


def test_cell600_and_strip(tmp_path):
    cell = tmp_path / "cell.mmp"
    vecs = tmp_path / "vecs.txt"
    res = invoke("cell600", "--out-mmp", str(cell), "--out-vectors", str(vecs))
    assert res.exit_code == 0
    assert cell.read_text().count(",") == 74
    assert len(vecs.read_text().splitlines()) == 60

    out = tmp_path / "two.mmp"
    res = invoke(
        "strip", "--in", str(cell), "--k", "73", "--connected-only",
        "--renormalize", "--out", str(out),
    )
    assert res.exit_code == 0
    assert "600 subsets" in res.output


def test_strip_window(tmp_path):
    src = tmp_path / "in.mmp"
    src.write_text("123,345,561,246.\n")
    out = tmp_path / "out.mmp"
    res = invoke(
        "strip", "--in", str(src), "--k", "2", "--window", "0:3",
        "--out", str(out),
    )
    assert res.exit_code == 0
    assert len(out.read_text().splitlines()) == 3
    res = invoke(
        "strip", "--in", str(src), "--k", "2", "--window", "junk",
        "--out", str(out),
    )
    assert res.exit_code != 0


def test_color_and_critical(tmp_path):
    src = tmp_path / "in.mmp"
    src.write_text("123,345,561.\n" + CORPUS_LINES["38-19"] + "\n")
    col, ks = tmp_path / "col.mmp", tmp_path / "ks.mmp"
    res = invoke(
        "color", "--in", str(src), "--out-colorable", str(col),
        "--out-ks", str(ks), "--witness",
    )
    assert res.exit_code == 0
    assert "1 colorable, 1 KS" in res.output
    assert "# ones=" in col.read_text()

    crit = tmp_path / "crit.mmp"
    res = invoke("critical", "--in", str(src), "--out", str(crit))
    assert "1 of 2" in res.output
    assert crit.read_text().strip() == CORPUS_LINES["38-19"]


def test_canon(tmp_path):
    src = tmp_path / "in.mmp"
    src.write_text("123,345,561.\n234,456,612.\n1234.\n")
    out = tmp_path / "canon.mmp"
    res = invoke("canon", "--in", str(src), "--out", str(out), "--mapping")
    assert res.exit_code == 0
    assert "3 inputs, 2 isomorphism classes" in res.output
    assert "->" in res.output


def test_loops_command(tmp_path):
    src = tmp_path / "in.mmp"
    src.write_text("123,345,561.\n")
    draws = tmp_path / "draws"
    res = invoke(
        "loops", "--in", str(src), "--all-max", "--draw", str(draws),
        "--backend", "svg",
    )
    assert res.exit_code == 0
    assert "(3-gon)" in res.output
    assert "arrangement 0" in res.output
    files = list(draws.glob("*.svg"))
    assert len(files) == 1


def test_stats_commands(tmp_path):
    res = invoke("stats", "coupon", "--n", "545961", "--c", "516604")
    assert res.output.strip() == "4893025"
    res = invoke("stats", "coupon", "--n", "1", "--c", "1")
    assert "unbounded" in res.output

    res = invoke(
        "stats", "bounds", "--K", "9e15", "--n", "52800000", "--m", "580"
    )
    assert "upper 1.07" in res.output

    recs = tmp_path / "r.jsonl"
    recs.write_text(
        '{"edges": 74, "total": "75", "non_isomorphic": 1.0}\n'
        '{"edges": 73, "total": "2775", "non_isomorphic": 4.0}\n'
    )
    table = tmp_path / "table.txt"
    res = invoke("stats", "aggregate", "--in", str(recs), "--out", str(table))
    assert res.exit_code == 0
    assert table.exists()
    assert table.with_suffix(".plot.json").exists()
    assert "2775" in table.read_text()


def test_survey_exit_codes(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("bogus = 1\n")
    res = CliRunner().invoke(main, ["survey", "--config", str(bad)])
    assert res.exit_code == 1

    start = tmp_path / "start.mmp"
    start.write_text(CORPUS_LINES["38-19"] + "\n")
    cfg = tmp_path / "ok.cfg"
    cfg.write_text(f"start = start.mmp\nmin-edges = 17\nout = sv\n")
    res = CliRunner().invoke(main, ["survey", "--config", str(cfg)])
    assert res.exit_code == 0
    assert "edges 18" in res.output
    assert (tmp_path / "sv" / "edges-18.json").exists()
