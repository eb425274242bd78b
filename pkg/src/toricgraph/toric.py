"""Toric configurations and walk binomials.

A graph's configuration is its vertex-edge incidence matrix: the column of
edge e = {u, v} is the 0/1 vector with ones at u and v. Kernel vectors of the
configuration are binomials, stored as signed exponent vectors over the edges.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from . import vectors
from .blocks import block_decomposition
from .errors import ToricGraphError, ZeroBinomialError
from .graphs import ClosedWalk, Graph, MultiGraph


class ToricConfiguration:
    """Integer matrix whose columns are the configuration vectors."""

    __slots__ = ("rows", "_rank")

    def __init__(self, rows: Sequence[Sequence[int]]):
        mat = tuple(tuple(int(x) for x in row) for row in rows)
        if mat and any(len(r) != len(mat[0]) for r in mat):
            raise ToricGraphError("ragged configuration matrix")
        self.rows = mat
        self._rank: int | None = None

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def column_count(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.column_count)]

    def multiply(self, u: Sequence[int]) -> tuple[int, ...]:
        if len(u) != self.column_count:
            raise ToricGraphError(
                f"vector length {len(u)} != column count {self.column_count}"
            )
        return tuple(sum(a * x for a, x in zip(row, u)) for row in self.rows)

    @property
    def rank(self) -> int:
        if self._rank is None:
            from .lattice import IntMatrix, rank

            self._rank = rank(IntMatrix(self.rows))
        return self._rank

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ToricConfiguration):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"ToricConfiguration({self.row_count}x{self.column_count})"


@dataclass(frozen=True)
class Binomial:
    """Signed exponent vector u - v with disjoint positive/negative supports.

    The sign is canonical: the nonzero entry with the smallest edge id is
    positive. The zero vector is representable (degree 0) but is never
    produced from a walk.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", vectors.canonical_sign(self.exponents))

    @property
    def degree(self) -> int:
        return sum(x for x in self.exponents if x > 0)

    @property
    def positive_part(self) -> tuple[int, ...]:
        return vectors.positive_part(self.exponents)

    @property
    def negative_part(self) -> tuple[int, ...]:
        return vectors.negative_part(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return vectors.support(self.exponents)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.exponents)

    def display(self) -> str:
        """Human format "e3^2*e5 - e1*e2*e4" with 1-based edge ids."""
        if self.is_zero():
            return "0"

        def side(entries: Sequence[int], sign: int) -> str:
            terms = []
            for i, x in enumerate(entries):
                if sign * x > 0:
                    e = abs(x)
                    terms.append(f"e{i + 1}" + (f"^{e}" if e > 1 else ""))
            return "*".join(terms) if terms else "1"

        return f"{side(self.exponents, 1)} - {side(self.exponents, -1)}"

    def machine(self) -> list[list[int]]:
        """[[edge id, signed exponent], ...] with 1-based ids, ascending."""
        return [[i + 1, x] for i, x in enumerate(self.exponents) if x != 0]


def incidence_configuration(g: Graph) -> ToricConfiguration:
    """|V| x |E| matrix; column e has ones exactly at the endpoints of e."""
    rows = [[0] * g.edge_count for _ in range(g.vertex_count)]
    for eid, (u, v) in enumerate(g.edges):
        rows[u][eid] = 1
        rows[v][eid] = 1
    return ToricConfiguration(rows)


def a_degree(u: Sequence[int], a: ToricConfiguration) -> tuple[int, ...]:
    """The configuration degree A*u of a monomial exponent vector."""
    if any(x < 0 for x in u):
        raise ToricGraphError("monomial exponents must be nonnegative")
    return a.multiply(u)


def binomial_of_walk(w: ClosedWalk, g: Graph) -> Binomial:
    """Binomial of an even closed walk: odd positions minus even positions.

    Edges at odd positions (1st, 3rd, ...) contribute +1 each, even positions
    -1 each; the result is sign-canonicalized. A fully cancelling walk is
    rejected rather than returned as zero.
    """
    if len(w) % 2 != 0:
        raise ToricGraphError(f"walk has odd length {len(w)}")
    w.vertex_sequence(g)
    exps = [0] * g.edge_count
    for pos, eid in enumerate(w.edges):
        exps[eid] += 1 if pos % 2 == 0 else -1
    if all(x == 0 for x in exps):
        raise ZeroBinomialError("walk cancels to the zero binomial")
    return Binomial(tuple(exps))


def degree(b: Binomial) -> int:
    return b.degree


def doubled_graph(w_subgraph: Graph) -> MultiGraph:
    """The multigraph obtained by doubling every cut edge of a connected graph."""
    dec = block_decomposition(w_subgraph)
    bridges = {min(b) for b, kind in zip(dec.blocks, dec.kinds) if kind == "cut-edge"}
    edges: list[tuple[int, int, int]] = []
    for eid, (u, v) in enumerate(w_subgraph.edges):
        edges.append((u, v, eid))
        if eid in bridges:
            edges.append((u, v, eid))
    return MultiGraph(
        labels=w_subgraph.labels, edges=tuple(edges), doubled=frozenset(bridges)
    )
