"""Primitivity of subgraphs and the graph-side Graver basis.

A connected subgraph carries a primitive walk exactly when it is an even
cycle, or it is not biconnected, every block is a cycle or a cut edge, and
every cut vertex sits in exactly two blocks whose two sides both contain an
odd number of cycle-block edges.
"""

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from .blocks import BlockTree, block_decomposition
from .errors import EnumerationCapError, ToricGraphError, enumeration_cap
from .graphs import ClosedWalk, Graph, eulerian_trail
from .toric import Binomial, binomial_of_walk, doubled_graph

SUBSET_CAP_DEFAULT = 2**20


@dataclass(frozen=True)
class PrimitivityVerdict:
    primitive: bool
    reason: str
    failing_block: tuple[int, ...] | None = None
    failing_cut_vertex: str | None = None
    part_edge_totals: tuple[int, int] | None = None

    def describe(self) -> str:
        bits = [self.reason]
        if self.failing_block is not None:
            bits.append(f"block edges {list(self.failing_block)}")
        if self.failing_cut_vertex is not None:
            bits.append(f"cut vertex {self.failing_cut_vertex!r}")
        if self.part_edge_totals is not None:
            bits.append(f"cyclic edge totals {self.part_edge_totals}")
        return "; ".join(bits)


def is_primitive_subgraph(w: Graph) -> PrimitivityVerdict:
    """Decide whether the connected graph w underlies a primitive walk."""
    if not w.is_connected():
        raise ToricGraphError("primitivity is defined for connected subgraphs")
    n, m = w.vertex_count, w.edge_count
    if m >= 3 and m % 2 == 0 and m == n and all(w.degree(v) == 2 for v in range(n)):
        return PrimitivityVerdict(primitive=True, reason="even cycle")
    dec = block_decomposition(w)
    if not dec.cut_vertices:
        return PrimitivityVerdict(
            primitive=False,
            reason="biconnected but not an even cycle",
            failing_block=tuple(range(m)),
        )
    for edges, kind in zip(dec.blocks, dec.kinds):
        if kind == "other":
            return PrimitivityVerdict(
                primitive=False,
                reason="a block is neither a cycle nor a cut edge",
                failing_block=tuple(sorted(edges)),
            )
    tree = BlockTree(dec)
    for v in dec.cut_vertices:
        if len(tree.cut_blocks[v]) != 2:
            return PrimitivityVerdict(
                primitive=False,
                reason="a cut vertex belongs to more than two blocks",
                failing_cut_vertex=w.label(v),
            )
    cyclic = [len(b) if kind == "cycle" else 0 for b, kind in zip(dec.blocks, dec.kinds)]
    total_cyclic = sum(cyclic)
    side = _subtree_cyclic_sums(tree, cyclic)
    for v in dec.cut_vertices:
        part1 = side[v]
        part2 = total_cyclic - part1
        if part1 % 2 == 0 or part2 % 2 == 0:
            return PrimitivityVerdict(
                primitive=False,
                reason="a cut vertex splits the subgraph into parts with an even cyclic edge total",
                failing_cut_vertex=w.label(v),
                part_edge_totals=(part1, part2),
            )
    return PrimitivityVerdict(primitive=True, reason="valid block structure")


def _subtree_cyclic_sums(tree: BlockTree, cyclic: list[int]) -> dict[int, int]:
    """For each cut vertex (assumed in exactly two blocks): the cyclic edge
    count of the block-tree side hanging below it, away from block 0."""
    parent_of_block: dict[int, int | None] = {0: None}
    parent_of_cut: dict[int, int] = {}
    order: list[int] = [0]
    frontier = [0]
    while frontier:
        nxt: list[int] = []
        for b in frontier:
            for v in tree.block_cuts[b]:
                if v in parent_of_cut:
                    continue
                parent_of_cut[v] = b
                for d in tree.cut_blocks[v]:
                    if d not in parent_of_block:
                        parent_of_block[d] = v
                        order.append(d)
                        nxt.append(d)
        frontier = nxt
    sums = {b: cyclic[b] for b in range(tree.block_count)}
    for b in reversed(order):
        v = parent_of_block[b]
        if v is not None:
            sums[parent_of_cut[v]] += sums[b]
    side: dict[int, int] = {}
    for v, blocks in tree.cut_blocks.items():
        child = next(b for b in blocks if parent_of_block.get(b) == v)
        side[v] = sums[child]
    return side


def connected_edge_subsets(g: Graph, cap: int | None = None) -> Iterator[list[int]]:
    """Every connected edge subset exactly once (grow-above-minimum scheme)."""
    limit = enumeration_cap(cap, default=SUBSET_CAP_DEFAULT)
    produced = 0
    for e0 in range(g.edge_count):
        u0, v0 = g.endpoints(e0)
        stack: list[tuple[list[int], frozenset[int], frozenset[int]]] = [
            ([e0], frozenset(), frozenset((u0, v0)))
        ]
        while stack:
            chosen, banned, vset = stack.pop()
            produced += 1
            if produced > limit:
                raise EnumerationCapError(f"more than {limit} connected edge subsets")
            yield chosen
            chosen_set = set(chosen)
            cands = sorted(
                {
                    eid
                    for v in vset
                    for eid, _ in g.incident(v)
                    if eid > e0 and eid not in chosen_set and eid not in banned
                }
            )
            newban = set(banned)
            for eid in cands:
                a, b = g.endpoints(eid)
                stack.append((chosen + [eid], frozenset(newban), vset | {a, b}))
                newban.add(eid)


def graver_from_graph(g: Graph, cap: int | None = None) -> set[Binomial]:
    """Graver basis of the graph's toric ideal via the primitive-subgraph sweep.

    Every connected subgraph passing the primitivity test contributes the
    binomial of an Eulerian trail of its cut-edge-doubled form; one canonical
    representative per subgraph.
    """
    result: set[Binomial] = set()
    for edge_ids in connected_edge_subsets(g, cap):
        sub, emap, vmap = g.subgraph(edge_ids)
        if not is_primitive_subgraph(sub).primitive:
            continue
        walk = eulerian_trail(doubled_graph(sub))
        lifted = ClosedWalk(
            edges=tuple(emap[e] for e in walk.edges), start=vmap[walk.start]
        )
        result.add(binomial_of_walk(lifted, g))
    return result


def grn_primitive_binomial(n: int, r: int) -> Binomial:
    """The Eulerian-trail Graver element of the r-th attachment graph."""
    if r == 0:
        raise ToricGraphError("the depth-0 graph is an odd cycle: no even closed trail")
    from .grn import GrnParams, build_grn

    g = build_grn(GrnParams(n=n, r=r))
    return binomial_of_walk(eulerian_trail(doubled_graph(g)), g)


def has_proper_conformal_subwalk(w: ClosedWalk, g: Graph, cap: int | None = None) -> bool:
    """Exhaustive search for a shorter even closed subwalk whose odd- and
    even-position edge multisets divide those of w. Primitivity of w is
    equivalent to this returning False."""
    if len(w) % 2 != 0:
        raise ToricGraphError("subwalk test needs an even closed walk")
    limit = enumeration_cap(cap)
    plus_budget = Counter(w.edges[0::2])
    minus_budget = Counter(w.edges[1::2])
    target_len = len(w)
    steps = 0

    def dfs(v0: int, v: int, length: int) -> bool:
        nonlocal steps
        budget = plus_budget if length % 2 == 0 else minus_budget
        for eid, u in g.incident(v):
            if budget[eid] <= 0:
                continue
            steps += 1
            if steps > limit:
                raise EnumerationCapError(f"subwalk search exceeded {limit} steps")
            budget[eid] -= 1
            if u == v0 and (length + 1) % 2 == 0 and length + 1 < target_len:
                budget[eid] += 1
                return True
            if length + 2 < target_len and dfs(v0, u, length + 1):
                budget[eid] += 1
                return True
            budget[eid] += 1
        return False

    for v0 in range(g.vertex_count):
        if dfs(v0, v0, 0):
            return True
    return False
