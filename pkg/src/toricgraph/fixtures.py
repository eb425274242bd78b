"""Bundled corpus graphs used by the tests and the command line."""

from .errors import ToricGraphError
from .graphs import Graph
from .grn import GrnParams, build_grn


def fixtures() -> dict[str, Graph]:
    """Named corpus, in canonical order."""
    corpus: dict[str, Graph] = {}
    corpus["triangle"] = Graph.from_edge_labels([("a", "b"), ("b", "c"), ("c", "a")])
    corpus["square"] = Graph.from_edge_labels(
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
    )
    corpus["bowtie"] = Graph.from_edge_labels(
        [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "e"), ("e", "a")]
    )
    corpus["two-triangles-bridge"] = Graph.from_edge_labels(
        [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d"), ("a", "d")]
    )
    corpus["square-pendant-triangle"] = Graph.from_edge_labels(
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "e"), ("e", "f"), ("f", "a")]
    )
    corpus["K4"] = Graph.from_edge_labels(
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
    )
    corpus["K_3,3"] = Graph.from_edge_labels(
        [(u, v) for u in ("a", "b", "c") for v in ("x", "y", "z")]
    )
    corpus["G_1^3"] = build_grn(GrnParams(n=3, r=1))
    corpus["G_2^3"] = build_grn(GrnParams(n=3, r=2))
    return corpus


def fixture(name: str) -> Graph:
    corpus = fixtures()
    try:
        return corpus[name]
    except KeyError:
        known = ", ".join(corpus)
        raise ToricGraphError(f"unknown fixture {name!r}; available: {known}") from None
