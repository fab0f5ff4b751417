import csv
import io
import json

import pytest

from modflip import formats
from modflip.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_construct_zigzag_single_triangle(capsys):
    code, out = run(capsys, "construct", "--family", "zigzag", "--n", "3")
    assert code == 0
    T = formats.loads(out.out)
    assert T.num_triangles == 1


def test_construct_witness_validates(capsys, tmp_path):
    path = tmp_path / "a.json"
    assert main(["construct", "--family", "a-minus", "--g", "1", "--n", "5", "--out", str(path)]) == 0
    T = formats.read(path)
    assert (T.genus, T.marks) == (1, 5)


def test_construct_with_core(capsys, tmp_path):
    core = tmp_path / "core.json"
    assert main(["construct", "--family", "core", "--g", "2", "--out", str(core)]) == 0
    code, out = run(capsys, "construct", "--family", "a-plus", "--g", "2", "--n", "4",
                    "--core", str(core))
    assert code == 0 and formats.loads(out.out).genus == 2


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "construct", "--n", "3")[0] == 2
    assert run(capsys, "construct", "--family", "bogus", "--n", "3")[0] == 2
    assert run(capsys, "enumerate", "--n", "0")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"genus": 1, "marks": 1, "triangles": [["b:1", "i:0:0", "i:0:1"]]}))
    assert run(capsys, "distance", "--from", str(bad), "--to", str(bad))[0] == 3


def test_budget_exit_and_partial(capsys):
    code, out = run(capsys, "enumerate", "--g", "1", "--n", "5", "--node-budget", "100")
    assert code == 4
    assert json.loads(out.out)["partial"] is True


def test_verify_bounds_n1(capsys):
    code, out = run(capsys, "verify-bounds", "--g", "1", "--n-max", "1", "--format", "csv")
    assert code == 0
    (row,) = csv.DictReader(io.StringIO(out.out))
    assert row["n"] == "1" and row["diameter"] == "0" and row["pass"] == "True"


def test_distance_witness_pair(capsys, tmp_path):
    a, b = tmp_path / "A2-.json", tmp_path / "A2+.json"
    main(["construct", "--family", "a-minus", "--n", "2", "--out", str(a)])
    main(["construct", "--family", "a-plus", "--n", "2", "--out", str(b)])
    code, out = run(capsys, "distance", "--from", str(a), "--to", str(b))
    assert code == 0 and json.loads(out.out)["distance"] >= 3


def test_transform_seeded(capsys):
    code, out = run(capsys, "transform", "--g", "1", "--n", "7", "--seed", "3")
    doc = json.loads(out.out)
    assert code == 0 and doc["within_bound"] and doc["partial"] is False
    code2, out2 = run(capsys, "transform", "--g", "1", "--n", "7", "--seed", "3")
    assert out2.out == out.out


@pytest.mark.parametrize("fmt", ["json", "csv", "dot"])
def test_enumerate_formats(capsys, fmt):
    code, out = run(capsys, "enumerate", "--g", "0", "--n", "6", "--format", fmt)
    assert code == 0
    if fmt == "json":
        assert len(json.loads(out.out)["nodes"]) == 14
    elif fmt == "csv":
        assert out.out.startswith("source,target")
    else:
        assert out.out.startswith("graph")


def test_diameter_from_store(capsys, tmp_path):
    path = tmp_path / "store.json"
    assert main(["enumerate", "--g", "1", "--n", "3", "--out", str(path)]) == 0
    code, out = run(capsys, "diameter", "--store", str(path))
    assert code == 0 and json.loads(out.out)["diameter"] == 10


def test_replay_lemmas(capsys):
    code, out = run(capsys, "replay-lemmas", "--n-max", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert rows and all(r["pass"] == "True" for r in rows)
