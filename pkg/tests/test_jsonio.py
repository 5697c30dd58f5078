import json
from fractions import Fraction as F

import pytest

from ncbiortho import jsonio
from ncbiortho.banded import INF, BandedMatrix
from ncbiortho.biortho import build_system, random_generic_table
from ncbiortho.jsonio import FormatError
from ncbiortho.linalg import Matrix
from ncbiortho.poly import CentralPoly, LeftPoly
from ncbiortho.ring import I, Quaternion, Ring

R, Q = Ring.RATIONAL, Ring.QUATERNION


def through_text(obj):
    return json.loads(json.dumps(obj))


@pytest.mark.parametrize("ring", [R, Q])
def test_table_and_system_round_trip(ring, rng):
    t = random_generic_table(ring, 4, rng)
    assert jsonio.load_table(through_text(jsonio.dump_table(t))) == t
    sys = build_system(t, 4, normalized=True)
    back = jsonio.load_system(through_text(jsonio.dump_system(sys)))
    assert back.ps == sys.ps and back.qs == sys.qs and back.normalization == sys.normalization


def test_ring_inferred_from_entries():
    t = jsonio.load_table({"entries": [[["1", "0", "1/2", "0"]]]})
    assert t.ring is Q and t[0, 0] == Quaternion(1, 0, F(1, 2))
    t = jsonio.load_table({"entries": [["1/3", 2]]})
    assert t.ring is R and t[0, 1] == 2


def test_scalars_are_strings():
    dumped = jsonio.dump_table(jsonio.load_table({"entries": [["-3/6"]]}))
    assert dumped["entries"] == [["-1/2"]]


def test_banded_round_trip():
    b = BandedMatrix(Q, 3, -1, INF, {(0, 1): I, (2, 0): Quaternion(2)})
    obj = through_text(jsonio.dump_banded(b))
    assert obj["hi"] == "+inf"
    assert jsonio.load_banded(obj) == b


def test_matrix_and_poly_round_trip():
    m = Matrix([[F(1), F(2)], [F(3), F(4)]])
    assert jsonio.load_matrix(through_text(jsonio.dump_matrix(m))) == m
    p = LeftPoly([I, Quaternion(1)], Q)
    assert jsonio.load_poly(through_text(jsonio.dump_poly(p))) == p
    f = jsonio.load_poly({"coeffs": ["0", "1"]}, central=True, var="x")
    assert isinstance(f, CentralPoly)


@pytest.mark.parametrize("bad", [
    {"entries": [["1", "x"]]},
    {"entries": [["1"], ["1", "2"]]},
    {"entries": []},
    {"rows": 2, "entries": [["1"]]},
    {"nope": 1},
])
def test_malformed_tables(bad):
    with pytest.raises(FormatError):
        jsonio.load_table(bad)


def test_malformed_banded():
    with pytest.raises(FormatError):
        jsonio.load_banded({"trunc": 2, "lo": 0, "hi": 0, "entries": [[0, "a", "1"]]})
    with pytest.raises(FormatError):
        jsonio.load_banded({"trunc": 2, "lo": "up", "hi": 0, "entries": []})


def test_noncentral_kernel_rejected():
    with pytest.raises(FormatError):
        jsonio.load_poly({"coeffs": [["0", "1", "0", "0"]]}, central=True, var="x")


def test_json_error_has_location(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "entries": [1,\n}')
    with pytest.raises(FormatError) as err:
        jsonio.read_json(path)
    assert f"{path}:3:" in str(err.value)
