import json

import pytest
from hypothesis import given

from conftest import triangulations
from modflip import formats
from modflip.canon import canonical_code
from modflip.surface import TriangulationError


@given(triangulations())
def test_round_trip_is_byte_identical(T):
    N = T.normalized()
    text = formats.dumps(N)
    back = formats.loads(text)
    assert formats.dumps(back.normalized()) == text
    assert canonical_code(back) == canonical_code(T)


def test_side_strings():
    assert formats.side_to_str(-4) == "b:4"
    assert formats.side_to_str(7) == "i:3:1"
    assert formats.side_from_str("i:3:1") == 7
    for bad in ("b:0", "x:1", "i:1:2", "i:a:0"):
        with pytest.raises(TriangulationError):
            formats.side_from_str(bad)


def test_rejects_bad_documents():
    with pytest.raises(TriangulationError):
        formats.loads("{")
    with pytest.raises(TriangulationError):
        formats.loads(json.dumps({"format": 2, "genus": 0, "marks": 3, "triangles": []}))
    with pytest.raises(TriangulationError):
        formats.loads(json.dumps({"genus": 0, "marks": 3, "triangles": [["b:1", "b:3", "b:2"]]}))
