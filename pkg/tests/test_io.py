from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from conftest import algebras_upto
from flewb.algebra import is_isomorphic
from flewb.boolean import compute_B, compute_D
from flewb.errors import AlgebraError, AlgebraFileError, NotAPartialOrder
from flewb.fixtures import fixtures
from flewb.io import algebra_from_dict, algebra_to_dict, dumps_algebra, file_names, load_algebra

G3_FILE = {
    "elements": ["0", "h", "1"],
    "hasse": [["0", "h"], ["h", "1"]],
    "monoid": {"h,h": "h", "0,0": "0", "0,h": "0", "0,1": "0", "h,1": "h", "1,1": "1"},
}


def test_hasse_and_object_monoid():
    A, tables = algebra_from_dict(G3_FILE)
    assert A.n == 3 and A.is_chain() and tables == {}
    assert A.neg(A.index("h")) == 0


def test_full_leq_relation():
    data = dict(G3_FILE)
    del data["hasse"]
    data["leq"] = [["0", "0"], ["h", "h"], ["1", "1"], ["0", "h"], ["0", "1"], ["h", "1"]]
    A, _ = algebra_from_dict(data)
    assert A.is_chain()


def test_leq_is_not_closed():
    data = dict(G3_FILE)
    del data["hasse"]
    data["leq"] = [["0", "h"], ["h", "1"]]
    with pytest.raises(NotAPartialOrder):
        algebra_from_dict(data)


def test_row_major_monoid_in_file_order():
    data = {
        "elements": ["1", "0", "h"],
        "hasse": [["0", "h"], ["h", "1"]],
        "monoid": [["1", "0", "h"], ["0", "0", "0"], ["h", "0", "h"]],
    }
    A, _ = algebra_from_dict(data)
    assert A.elements[0] == "0" and A.mul(A.index("h"), A.top) == A.index("h")


def test_flat_monoid_array():
    data = dict(G3_FILE)
    data["monoid"] = ["0", "0", "0", "0", "h", "h", "0", "h", "1"]
    A, _ = algebra_from_dict(data)
    assert A.mul(A.index("h"), A.index("h")) == A.index("h")


def test_operator_tables():
    data = dict(G3_FILE, B={"0": "0", "h": "0", "1": "1"}, D={"0": "1", "h": "1", "1": "0"})
    A, tables = algebra_from_dict(data)
    assert tables["B"] == compute_B(A)
    assert tables["D"] == compute_D(A).table


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"elements": "0 1", "hasse": [], "monoid": {}},
        {"elements": ["0", "a"], "hasse": [], "monoid": {}},
        {"elements": ["0", "0", "1"], "hasse": [], "monoid": {}},
        dict(G3_FILE, extra=1),
        {k: v for k, v in G3_FILE.items() if k != "monoid"},
        {k: v for k, v in G3_FILE.items() if k != "hasse"},
        dict(G3_FILE, leq=[]),
        dict(G3_FILE, hasse=[["0", "x"]]),
        dict(G3_FILE, monoid={"h,h": "h"}),
        dict(G3_FILE, monoid={"h;h": "h"}),
        dict(G3_FILE, monoid=[["0"]]),
        dict(G3_FILE, B={"0": "0"}),
        dict(G3_FILE, B=["0"]),
    ],
)
def test_format_errors(data):
    with pytest.raises(AlgebraFileError):
        algebra_from_dict(data)


def test_law_violations_are_not_format_errors():
    data = dict(G3_FILE, monoid={"h,h": "1", "0,0": "0", "0,h": "0", "0,1": "0", "h,1": "h", "1,1": "1"})
    with pytest.raises(AlgebraError) as info:
        algebra_from_dict(data)
    assert not isinstance(info.value, AlgebraFileError)


@pytest.mark.parametrize("name", list(fixtures()))
def test_round_trip_fixtures(name):
    A = fixtures()[name]
    B, tables = algebra_from_dict(json.loads(dumps_algebra(A, {"B": compute_B(A)})))
    assert is_isomorphic(A, B)
    assert tables["B"] == compute_B(B)


def test_product_bounds_renamed():
    P = fixtures()["G2xG3"]
    names = file_names(P)
    assert names[0] == "0" and names[P.top] == "1" and "(1,1/2)" in names


@given(st.sampled_from(algebras_upto(5)))
def test_round_trip_enumerated(A):
    B, _ = algebra_from_dict(algebra_to_dict(A))
    assert B.elements == A.elements and B.monoid == A.monoid and B.leq == A.leq


def test_load_from_disk(tmp_path):
    path = tmp_path / "g3.json"
    path.write_text(json.dumps(G3_FILE))
    A, _ = load_algebra(path)
    assert A.name == "g3"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(AlgebraFileError):
        load_algebra(bad)
