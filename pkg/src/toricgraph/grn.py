"""The recursive attachment family and its degree separation report.

Depth 0 is an odd cycle of length n; each further depth glues a fresh n-cycle
onto every vertex of degree two. The Eulerian-trail Graver element of the
depth-r graph has degree (n + n^2((n-1)^r - 1)/(n-2))/2, exponential in r,
while the maximum circuit degree is n + (2r-1)(n-1), linear in r.
"""

from dataclasses import dataclass
from fractions import Fraction

from .blocks import BlockTree, block_decomposition, max_block_distance
from .circuits import max_circuit_degree, max_circuit_degree_cactus_witness
from .errors import ToricGraphError
from .graphs import Graph, GraphBuilder, eulerian_trail
from .graver import graver_completion
from .primitive import is_primitive_subgraph
from .toric import binomial_of_walk, doubled_graph, incidence_configuration


@dataclass(frozen=True)
class GrnParams:
    n: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 3 or self.n % 2 == 0:
            raise ToricGraphError(f"cycle length must be odd and >= 3, got {self.n}")
        if self.r < 0:
            raise ToricGraphError(f"depth must be nonnegative, got {self.r}")


def build_grn(p: GrnParams) -> Graph:
    """Construct the depth-r graph deterministically.

    Root cycle vertices are "c0.0" ... "c0.(n-1)"; the cycle added at step s
    to vertex v gets vertices "<v>/s.1" ... "<v>/s.(n-1)". Degree-two vertices
    are processed in lexicographic label order within each step.
    """
    builder = GraphBuilder()
    ring = [builder.add_vertex(f"c0.{i}") for i in range(p.n)]
    for i in range(p.n):
        builder.add_edge(ring[i], ring[(i + 1) % p.n])
    for s in range(1, p.r + 1):
        targets = [v for v in range(len(builder.labels)) if builder.degrees[v] == 2]
        targets.sort(key=lambda v: builder.labels[v])
        for v in targets:
            base = builder.labels[v]
            cycle = [v] + [builder.add_vertex(f"{base}/{s}.{i}") for i in range(1, p.n)]
            for i in range(p.n):
                builder.add_edge(cycle[i], cycle[(i + 1) % p.n])
    return builder.graph()


def grn_graver_degree(p: GrnParams) -> int:
    """Exact degree of the Eulerian-trail Graver element (defined for r >= 1)."""
    if p.r == 0:
        raise ToricGraphError("depth 0 has no even closed trail")
    geometric = ((p.n - 1) ** p.r - 1) // (p.n - 2)
    return (p.n + p.n * p.n * geometric) // 2


def grn_circuit_bound(p: GrnParams) -> int:
    """Maximum circuit degree n + (2r-1)(n-1) (defined for r >= 1)."""
    if p.r == 0:
        raise ToricGraphError("the circuit bound starts at depth 1")
    return p.n + (2 * p.r - 1) * (p.n - 1)


def grn_degree2_count(p: GrnParams) -> int:
    return p.n * (p.n - 1) ** p.r


@dataclass(frozen=True)
class SeparationRow:
    r: int
    graver_degree: int
    t: int
    edges: int
    vertices: int
    deg2_count: int
    blocks: int
    max_block_distance: int
    graver_to_t: Fraction
    graver_to_t_squared: Fraction


@dataclass(frozen=True)
class SeparationReport:
    n: int
    rows: tuple[SeparationRow, ...]


CSV_COLUMNS = (
    "r",
    "graver_degree",
    "t",
    "edges",
    "vertices",
    "deg2_count",
    "blocks",
    "max_block_distance",
)


def separation_report(n: int, r_max: int, verify_up_to: int = 2) -> SeparationReport:
    """Per-depth table of Graver degree vs maximum circuit degree.

    Every row is recomputed on the constructed graph (Eulerian-trail degree
    and the cactus maximum circuit degree) and must agree with the closed
    forms. Rows up to verify_up_to are additionally cross-checked by full
    circuit enumeration, and depth 1 by the completion engine.
    """
    if r_max < 1:
        raise ToricGraphError("r_max must be at least 1")
    if verify_up_to < 0:
        raise ToricGraphError("verify_up_to must be nonnegative")
    rows = []
    for r in range(1, r_max + 1):
        p = GrnParams(n=n, r=r)
        g = build_grn(p)
        binom = binomial_of_walk(eulerian_trail(doubled_graph(g)), g)
        gd = binom.degree
        if gd != grn_graver_degree(p):
            raise ToricGraphError(
                f"r={r}: Eulerian-trail degree {gd} disagrees with the closed form"
            )
        t_val, _ = max_circuit_degree_cactus_witness(g)
        if t_val != grn_circuit_bound(p):
            raise ToricGraphError(
                f"r={r}: maximum circuit degree {t_val} disagrees with the closed form"
            )
        if not is_primitive_subgraph(g).primitive:
            raise ToricGraphError(f"r={r}: graph unexpectedly fails the primitivity test")
        if r <= verify_up_to and max_circuit_degree(g) != t_val:
            raise ToricGraphError(f"r={r}: enumeration disagrees with the cactus value")
        if r <= min(verify_up_to, 1):
            gset = graver_completion(incidence_configuration(g))
            if binom.exponents not in gset:
                raise ToricGraphError(
                    f"r={r}: Eulerian binomial missing from the completion Graver set"
                )
        dec = block_decomposition(g)
        rows.append(
            SeparationRow(
                r=r,
                graver_degree=gd,
                t=t_val,
                edges=g.edge_count,
                vertices=g.vertex_count,
                deg2_count=sum(1 for v in range(g.vertex_count) if g.degree(v) == 2),
                blocks=len(dec.blocks),
                max_block_distance=max_block_distance(BlockTree(dec)),
                graver_to_t=Fraction(gd, t_val),
                graver_to_t_squared=Fraction(gd, t_val * t_val),
            )
        )
    return SeparationReport(n=n, rows=tuple(rows))


def _ratio_text(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator} ({fr.numerator / fr.denominator:.3f})"


def render_csv(report: SeparationReport) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in report.rows:
        lines.append(",".join(str(getattr(row, col)) for col in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def render_table(report: SeparationReport) -> str:
    headers = [*CSV_COLUMNS, "graver/t", "graver/t^2"]
    body = []
    for row in report.rows:
        body.append(
            [str(getattr(row, col)) for col in CSV_COLUMNS]
            + [_ratio_text(row.graver_to_t), _ratio_text(row.graver_to_t_squared)]
        )
    widths = [max(len(h), *(len(line[i]) for line in body)) for i, h in enumerate(headers)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers)]
    lines.extend(fmt.format(*line) for line in body)
    return "\n".join(line.rstrip() for line in lines) + "\n"
