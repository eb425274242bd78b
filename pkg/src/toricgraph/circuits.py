"""Circuit enumeration for graph toric ideals.

The circuits are exactly the even cycles, the pairs of odd cycles meeting in
one vertex, and the pairs of vertex-disjoint odd cycles joined by a path.
Their binomials carry alternating +-1 around the cycles and alternating +-2
along the connecting path; both fall out of walking the subgraph once around.
"""

from dataclasses import dataclass, field

from .blocks import BlockTree, block_decomposition
from .errors import EnumerationCapError, ToricGraphError, enumeration_cap
from .graphs import ClosedWalk, Graph, connecting_paths, cycle_vertices, enumerate_cycles
from .toric import Binomial, binomial_of_walk

KIND_EVEN = "even-cycle"
KIND_SHARED = "two-odd-cycles-one-vertex"
KIND_PATH = "two-odd-cycles-path"


@dataclass(frozen=True)
class CircuitSubgraph:
    """One circuit support: an even cycle, or two odd cycles plus a path."""

    kind: str
    cycle1: frozenset[int]
    cycle2: frozenset[int] = frozenset()
    path: tuple[int, ...] = field(default_factory=tuple)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.cycle1 | self.cycle2 | set(self.path)))

    def signature(self) -> tuple[tuple[int, ...], str]:
        return (self.edge_ids(), self.kind)

    def expected_degree(self) -> int:
        if self.kind == KIND_EVEN:
            return len(self.cycle1) // 2
        return (len(self.cycle1) + len(self.cycle2)) // 2 + len(self.path)


def enumerate_circuit_subgraphs(g: Graph, cap: int | None = None) -> list[CircuitSubgraph]:
    """All circuit subgraphs, deduplicated and sorted by edge-set signature."""
    max_count = enumeration_cap(cap)
    cycles = enumerate_cycles(g, "all", cap)
    odd = [c for c in cycles if len(c) % 2 == 1]
    even = [c for c in cycles if len(c) % 2 == 0]
    out: dict[tuple[tuple[int, ...], str], CircuitSubgraph] = {}

    def put(c: CircuitSubgraph) -> None:
        if len(out) >= max_count:
            raise EnumerationCapError(f"more than {max_count} circuits")
        out.setdefault(c.signature(), c)

    for c in even:
        put(CircuitSubgraph(kind=KIND_EVEN, cycle1=c))
    for i in range(len(odd)):
        vi = cycle_vertices(g, odd[i])
        for j in range(i + 1, len(odd)):
            shared = vi & cycle_vertices(g, odd[j])
            if len(shared) == 1:
                put(CircuitSubgraph(kind=KIND_SHARED, cycle1=odd[i], cycle2=odd[j]))
            elif not shared:
                for path in connecting_paths(g, odd[i], odd[j], cap):
                    put(
                        CircuitSubgraph(
                            kind=KIND_PATH, cycle1=odd[i], cycle2=odd[j], path=path
                        )
                    )
    return [out[key] for key in sorted(out)]


def _check_cycle(g: Graph, edges: frozenset[int], want_odd: bool | None = None) -> None:
    deg: dict[int, int] = {}
    for eid in edges:
        for v in g.endpoints(eid):
            deg[v] = deg.get(v, 0) + 1
    if len(deg) != len(edges) or any(d != 2 for d in deg.values()):
        raise ToricGraphError("edge set is not a single cycle")
    sub, _, _ = g.subgraph(edges)
    if not sub.is_connected():
        raise ToricGraphError("edge set is not a single cycle")
    if want_odd is not None and (len(edges) % 2 == 1) != want_odd:
        raise ToricGraphError("cycle has the wrong parity")


def _cycle_walk(g: Graph, cycle: frozenset[int], start: int) -> list[int]:
    """Edge sequence once around the cycle from start; smaller-id edge first."""
    here = sorted(eid for eid, _ in g.incident(start) if eid in cycle)
    walk = [here[0]]
    a, b = g.endpoints(here[0])
    v = b if start == a else a
    while v != start:
        nxt = next(
            eid for eid, w in g.incident(v) if eid in cycle and eid != walk[-1]
        )
        walk.append(nxt)
        a, b = g.endpoints(nxt)
        v = b if v == a else a
    return walk


def circuit_walk(c: CircuitSubgraph, g: Graph) -> ClosedWalk:
    """Even closed walk tracing the circuit: around cycle1, along the path,
    around cycle2, and back along the path."""
    if c.kind == KIND_EVEN:
        if c.cycle2 or c.path:
            raise ToricGraphError("even-cycle circuit must have no second cycle or path")
        _check_cycle(g, c.cycle1, want_odd=False)
        start = min(cycle_vertices(g, c.cycle1))
        return ClosedWalk(edges=tuple(_cycle_walk(g, c.cycle1, start)), start=start)
    _check_cycle(g, c.cycle1, want_odd=True)
    _check_cycle(g, c.cycle2, want_odd=True)
    v1s = cycle_vertices(g, c.cycle1)
    v2s = cycle_vertices(g, c.cycle2)
    if c.kind == KIND_SHARED:
        shared = v1s & v2s
        if len(shared) != 1 or c.path:
            raise ToricGraphError("shared-vertex circuit needs exactly one common vertex")
        v = shared.pop()
        edges = [*_cycle_walk(g, c.cycle1, v), *_cycle_walk(g, c.cycle2, v)]
        return ClosedWalk(edges=tuple(edges), start=v)
    if c.kind != KIND_PATH:
        raise ToricGraphError(f"unknown circuit kind {c.kind!r}")
    if v1s & v2s or not c.path:
        raise ToricGraphError("path circuit needs vertex-disjoint cycles and a path")
    ends0 = set(g.endpoints(c.path[0]))
    start1 = ends0 & v1s
    if len(start1) != 1:
        raise ToricGraphError("path does not start on the first cycle")
    v1 = start1.pop()
    v = v1
    seen_internal = set()
    for i, eid in enumerate(c.path):
        a, b = g.endpoints(eid)
        if v not in (a, b):
            raise ToricGraphError("path edges are not consecutive")
        v = b if v == a else a
        is_last = i == len(c.path) - 1
        if is_last:
            if v not in v2s:
                raise ToricGraphError("path does not end on the second cycle")
        elif v in v1s or v in v2s or v in seen_internal:
            raise ToricGraphError("path is not internally disjoint from the cycles")
        else:
            seen_internal.add(v)
    u1 = v
    edges = [
        *_cycle_walk(g, c.cycle1, v1),
        *c.path,
        *_cycle_walk(g, c.cycle2, u1),
        *reversed(c.path),
    ]
    return ClosedWalk(edges=tuple(edges), start=v1)


def circuit_binomial(c: CircuitSubgraph, g: Graph) -> Binomial:
    """Exponent vector of the circuit (canonical sign)."""
    return binomial_of_walk(circuit_walk(c, g), g)


def max_circuit_degree(g: Graph, cap: int | None = None) -> int:
    """Maximum circuit degree by full enumeration; 0 when there are no circuits."""
    best = 0
    for c in enumerate_circuit_subgraphs(g, cap):
        d = circuit_binomial(c, g).degree
        if d > best:
            best = d
    return best


def _cactus_cycle_positions(g: Graph, block: frozenset[int]) -> dict[int, int]:
    start = min(cycle_vertices(g, block))
    pos = {start: 0}
    v = start
    prev = -1
    for i in range(1, len(block)):
        eid = next(e for e, _ in g.incident(v) if e in block and e != prev)
        a, b = g.endpoints(eid)
        v = b if v == a else a
        pos[v] = i
        prev = eid
    return pos


def max_circuit_degree_cactus_witness(g: Graph) -> tuple[int, tuple[int, int] | None]:
    """(max circuit degree, achieving block pair) for a connected odd cactus.

    Tree dynamic program over the block tree; each internal cycle crossed
    from cut vertex x to cut vertex y contributes the longer arc between
    them. Values are doubled internally so everything stays integral.
    """
    dec = block_decomposition(g)
    for edges, kind in zip(dec.blocks, dec.kinds):
        if kind != "cycle" or len(edges) % 2 == 0:
            raise ToricGraphError("cactus fast path requires every block to be an odd cycle")
    tree = BlockTree(dec)
    if tree.block_count < 2:
        return 0, None
    positions = [_cactus_cycle_positions(g, b) for b in dec.blocks]
    sizes = [len(b) for b in dec.blocks]

    def arcmax(b: int, x: int, y: int) -> int:
        length = sizes[b]
        d = abs(positions[b][x] - positions[b][y])
        return length - min(d, length - d)

    # chain[(v, b)] = (doubled best value of an endpoint chain arriving at cut
    # vertex v from outside block b, endpoint block id)
    chain: dict[tuple[int, int], tuple[int, int]] = {}

    def resolve(v0: int, b0: int) -> tuple[int, int]:
        work = [(v0, b0)]
        while work:
            key = work[-1]
            if key in chain:
                work.pop()
                continue
            v, b = key
            pending = []
            for d in tree.cut_blocks[v]:
                if d == b:
                    continue
                for u in tree.block_cuts[d]:
                    if u != v and (u, d) not in chain:
                        pending.append((u, d))
            if pending:
                work.extend(pending)
                continue
            best_val = -1
            best_end = -1
            for d in tree.cut_blocks[v]:
                if d == b:
                    continue
                if sizes[d] > best_val or (sizes[d] == best_val and d < best_end):
                    best_val, best_end = sizes[d], d
                for u in tree.block_cuts[d]:
                    if u == v:
                        continue
                    val, endp = chain[(u, d)]
                    val += 2 * arcmax(d, u, v)
                    if val > best_val or (val == best_val and endp < best_end):
                        best_val, best_end = val, endp
            chain[key] = (best_val, best_end)
            work.pop()
        return chain[(v0, b0)]

    best_total = 0
    witness: tuple[int, int] | None = None
    for b in range(tree.block_count):
        for v in tree.block_cuts[b]:
            val, endp = resolve(v, b)
            total = sizes[b] + val
            if total > best_total:
                best_total = total
                witness = (b, endp) if b <= endp else (endp, b)
    return best_total // 2, witness


def max_circuit_degree_cactus(g: Graph) -> int:
    """Maximum circuit degree of a connected odd cactus, without enumeration."""
    value, _ = max_circuit_degree_cactus_witness(g)
    return value
