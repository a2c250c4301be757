"""Text and JSON formats for matroids, posets, graphs and certificates."""
from __future__ import annotations

import json

from .decomp import DecompositionCertificate
from .genperm import GenPermGraph, SimpleGraph
from .matroid import Matroid
from .posets import format_poset, parse_poset

__all__ = [
    "matroid_to_json", "matroid_from_json", "matroid_to_dict", "matroid_from_dict",
    "read_catalog", "write_catalog", "format_poset", "parse_poset",
    "parse_graph", "format_graph", "genperm_from_json", "genperm_to_json",
    "certificate_from_json", "certificate_to_json",
]


def matroid_to_dict(M: Matroid) -> dict:
    M = M.standardize()
    return {"n": M.n, "bases": [list(b) for b in M.base_list()]}


def matroid_from_dict(data: dict) -> Matroid:
    if not isinstance(data, dict) or "n" not in data or "bases" not in data:
        raise ValueError('matroid JSON needs keys "n" and "bases"')
    return Matroid.from_bases(int(data["n"]), data["bases"])


def matroid_to_json(M: Matroid) -> str:
    return json.dumps(matroid_to_dict(M), separators=(", ", ": "))


def matroid_from_json(text: str) -> Matroid:
    return matroid_from_dict(json.loads(text))


def write_catalog(matroids, path) -> None:
    with open(path, "w") as fh:
        for M in matroids:
            fh.write(matroid_to_json(M) + "\n")


def read_catalog(path) -> list:
    with open(path) as fh:
        return [matroid_from_json(line) for line in fh if line.strip()]


def parse_graph(text: str) -> SimpleGraph:
    """``n; 1-2, 2-3, ...``"""
    head, _, body = text.partition(";")
    n = int(head.strip())
    edges = []
    for chunk in body.split(","):
        chunk = chunk.strip()
        if chunk:
            a, _, b = chunk.partition("-")
            edges.append((int(a), int(b)))
    return SimpleGraph(n, frozenset(edges))


def format_graph(G: SimpleGraph) -> str:
    return f"{G.n}; " + ", ".join(f"{a}-{b}" for a, b in G.sorted_edges())


def genperm_to_json(Q: GenPermGraph) -> str:
    return json.dumps(
        {"n": Q.n, "vertices": [list(v) for v in Q.vertices], "edges": [list(e) for e in Q.edges]}
    )


def genperm_from_json(text: str) -> GenPermGraph:
    data = json.loads(text)
    return GenPermGraph(
        int(data["n"]),
        tuple(tuple(v) for v in data["vertices"]),
        tuple(tuple(e) for e in data["edges"]),
    )


def certificate_to_json(cert: DecompositionCertificate) -> str:
    return json.dumps(
        {"parent": matroid_to_dict(cert.parent), "pieces": [matroid_to_dict(P) for P in cert.pieces]}
    )


def certificate_from_json(text: str) -> DecompositionCertificate:
    data = json.loads(text)
    return DecompositionCertificate(
        matroid_from_dict(data["parent"]),
        tuple(matroid_from_dict(p) for p in data["pieces"]),
    )
