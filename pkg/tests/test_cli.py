import json
import subprocess
import sys
from io import StringIO

import pytest

from lieweyl.cli import bracket_table, main
from lieweyl.embedding import embed
from lieweyl.liealgebra import simple_lie_algebra
from lieweyl.serialization import SCHEMA, VERSION, embedding_from_json
from notation import DATA, g2_bracket_table, g2_operators, parse_weyl


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_embed_latex_contains_golden_operator():
    code, text = run("embed", "--type", "G2", "--crossed", "1,0", "--lambda", "0,0", "--format", "latex")
    assert code == 0
    assert "-3x_{1}\\partial_{4}^{2}-2x_{3}\\partial_{4}-3x_{2}\\partial_{3}+x_{5}" in text
    lines = [line for line in text.splitlines() if not line.startswith("%")]
    got = {line.split(" \\mapsto ")[0]: line.split(" \\mapsto ")[1].replace(" ", "") for line in lines}
    assert got == {k: v.replace(" ", "") for k, v in g2_operators().items()}


def test_check_f4_passes():
    code, text = run("check", "--type", "F4", "--crossed", "0,0,0,1")
    assert code == 0
    assert "52" in text


def test_check_structured():
    code, text = run("check", "--type", "G2", "--crossed", "0,1", "--format", "structured", "--jacobi")
    doc = json.loads(text)
    assert code == 0 and doc["pass"]
    assert doc["closure"]["basis_size"] == 14
    assert doc["jacobi"]["pass"]


def test_check_reports_failure_exit_code():
    code, text = run("check", "--type", "G2", "--crossed", "1,0", "--max-brackets", "3")
    assert code == 1
    assert "FAIL" in text


def test_table_matches_golden_entries():
    cols, golden = g2_bracket_table()
    code, text = run("table", "G2")
    assert code == 0
    rows = [line.split() for line in text.splitlines()]
    header, body = rows[0], rows[1:]
    assert header[3:] == cols
    raw = (DATA / "g2_bracket_table.tex").read_text().splitlines()[2:]
    assert len(body) == len(raw) == 14
    alg = simple_lie_algebra("G2")
    latex_rows = bracket_table(alg, latex=True)
    for cells, line, lrow in zip(body, raw, latex_rows):
        want = [c.strip() for c in line.split("&")]
        # root column prints with a space after the comma
        assert cells[0] + cells[1] == want[0].replace(" ", "")
        assert lrow[1] == want[1]
        assert cells[3] == want[2]
        name = cells[3]
        assert [golden[(name, c)] for c in cols] == cells[4:]


def test_table_default_and_structured():
    _, text = run("table")
    _, flagged = run("table", "--type", "G2")
    assert text == flagged
    _, doc = run("table", "B2", "--format", "structured")
    parsed = json.loads(doc)
    assert len(parsed["rows"]) == 10


def test_structured_round_trip():
    code, text = run("embed", "--type", "G2", "--crossed", "1,0", "--format", "structured", "--cartan")
    doc = json.loads(text)
    assert doc["schema"] == SCHEMA and doc["version"] == VERSION
    images = embedding_from_json(doc)
    result = embed("G2", (1, 0))
    alg = result.algebra
    assert set(images) == {alg.name(g) for g in result.images}
    for g, op in result.images.items():
        assert images[alg.name(g)] == op
    assert images["g_{-1}"].entries[(0, 0)] == parse_weyl("-3x_{1}\\partial_{4}^{2}-2x_{3}\\partial_{4}-3x_{2}\\partial_{3}+x_{5}", 5)


def test_structured_round_trip_with_levi_module():
    _, text = run("embed", "--type", "B2", "--crossed", "1,0", "--lambda", "1/2,2", "--format", "structured")
    doc = json.loads(text)
    assert doc["module"]["dim"] == 3
    assert doc["lambda"] == ["1/2", "2"]
    result = embed("B2", (1, 0), (0.5, 2))
    for g in list(result.images)[:4]:
        assert embedding_from_json(doc)[result.algebra.name(g)] == result.images[g]


def test_trace_prints_reduced_products():
    _, text = run("embed", "--type", "G2", "--crossed", "1,0", "--trace", "--format", "latex")
    traces = [line for line in text.splitlines() if line.startswith("% g_{")]
    assert len(traces) == 4
    _, doc = run("embed", "--type", "G2", "--crossed", "1,0", "--trace", "--format", "structured")
    assert set(json.loads(doc)["reduced"]) == {"g_{1}", "g_{-1}", "g_{2}", "g_{-2}"}


@pytest.mark.parametrize("argv", [
    ["embed", "--type", "G2", "--crossed", "1"],
    ["embed", "--type", "G2", "--crossed", "0,0"],
    ["embed", "--type", "G2", "--crossed", "1,2"],
    ["embed", "--type", "G2", "--crossed", "1,0", "--lambda", "0,x"],
    ["embed", "--type", "G2", "--crossed", "1,0", "--lambda", "0,-1"],
    ["embed", "--type", "A3", "--crossed", "1,0,0", "--lambda", "0,5,5", "--dim-cap", "10"],
    ["embed", "--type", "H3", "--crossed", "1,0,0"],
    ["embed", "--crossed", "1,0"],
    ["frobnicate"],
])
def test_bad_arguments_exit_with_code_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv, out=StringIO())
    assert exc.value.code == 2


def test_output_is_byte_identical_across_runs():
    argv = ["embed", "--type", "F4", "--crossed", "1,0,0,0", "--format", "structured", "--cartan"]
    assert run(*argv) == run(*argv)


def test_bench_runs_and_reports_ratio():
    code, text = run("bench", "--type", "G2", "--crossed", "1,0")
    assert code == 0
    assert "22,185" in text and "informational" in text
    _, doc = run("bench", "--type", "G2", "--crossed", "0,1", "--format", "structured")
    row, = json.loads(doc)
    assert row["reference_ops"] == 14072 and row["ops"] > 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lieweyl", "embed", "--type", "A1", "--crossed", "1"],
        capture_output=True, text=True, check=True,
    )
    assert "g_{-1} -> (x1) (x) id" in proc.stdout
