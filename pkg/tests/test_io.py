import json

from hypothesis import given

from matqsym.decomp import find_hyperplane_splits
from matqsym.genperm import SimpleGraph, from_matroid
from matqsym.io import (
    certificate_from_json,
    certificate_to_json,
    format_graph,
    format_poset,
    genperm_from_json,
    genperm_to_json,
    matroid_from_json,
    matroid_to_json,
    parse_graph,
    parse_poset,
    read_catalog,
    write_catalog,
)
from matqsym.matroid import uniform
from matqsym.posets import LabelledPoset

from .strategies import CATALOG_5, matroids


def test_matroid_json_format():
    text = matroid_to_json(uniform(2, 4))
    assert text == '{"n": 4, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}'
    assert matroid_from_json(text) == uniform(2, 4)


@given(matroids(6))
def test_matroid_round_trip(M):
    assert matroid_from_json(matroid_to_json(M)) == M.standardize()


def test_catalog_file(tmp_path):
    p = tmp_path / "cat.jsonl"
    write_catalog(CATALOG_5, p)
    assert read_catalog(p) == [M.standardize() for M in CATALOG_5]


def test_graph_text():
    G = parse_graph("4; 1-2, 3-2")
    assert G == SimpleGraph(4, frozenset({(1, 2), (2, 3)}))
    assert format_graph(G) == "4; 1-2, 2-3"
    assert parse_graph("2;") == SimpleGraph.empty(2)


def test_poset_text():
    P = parse_poset("3; 1<3, 2<3")
    assert P == LabelledPoset.from_relations([1, 2, 3], [(1, 3), (2, 3)])
    assert format_poset(P) == "3; 1<3, 2<3"


def test_genperm_and_certificate_json():
    Q = from_matroid(uniform(2, 4))
    assert genperm_from_json(genperm_to_json(Q)) == Q
    cert = find_hyperplane_splits(uniform(2, 4))[0].certificate
    back = certificate_from_json(certificate_to_json(cert))
    assert back == cert
    assert json.loads(certificate_to_json(cert))["parent"]["n"] == 4
