"""Biconnected components, cut vertices, and the block tree.

The block tree is the bipartite tree on blocks and cut vertices; the block
distance between two blocks counts the internal block nodes on their unique
tree path.
"""

from dataclasses import dataclass

from .errors import ToricGraphError
from .graphs import Graph


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as edge-id sets), cut vertices, and a per-block classification.

    Blocks are ordered by their smallest contained edge id; that position is
    the block id used everywhere else. kinds[i] is "cycle", "cut-edge", or
    "other".
    """

    graph: Graph
    blocks: tuple[frozenset[int], ...]
    cut_vertices: tuple[int, ...]
    kinds: tuple[str, ...]

    def block_vertices(self, b: int) -> set[int]:
        return {v for eid in self.blocks[b] for v in self.graph.endpoints(eid)}


class BlockTree:
    """Bipartite tree of blocks and cut vertices with incidence adjacency."""

    def __init__(self, decomposition: BlockDecomposition):
        self.decomposition = decomposition
        g = decomposition.graph
        cut_set = set(decomposition.cut_vertices)
        block_cuts: list[tuple[int, ...]] = []
        cut_blocks: dict[int, list[int]] = {v: [] for v in decomposition.cut_vertices}
        for b, edges in enumerate(decomposition.blocks):
            verts = sorted({v for eid in edges for v in g.endpoints(eid)})
            cuts = tuple(v for v in verts if v in cut_set)
            block_cuts.append(cuts)
            for v in cuts:
                cut_blocks[v].append(b)
        self.block_cuts: tuple[tuple[int, ...], ...] = tuple(block_cuts)
        self.cut_blocks: dict[int, tuple[int, ...]] = {
            v: tuple(bs) for v, bs in cut_blocks.items()
        }

    @property
    def block_count(self) -> int:
        return len(self.block_cuts)

    def node_count(self) -> int:
        return self.block_count + len(self.cut_blocks)

    def edge_count(self) -> int:
        return sum(len(c) for c in self.block_cuts)

    def edges(self) -> list[tuple[int, int]]:
        """(block id, cut vertex id) incidence pairs."""
        return [(b, v) for b, cuts in enumerate(self.block_cuts) for v in cuts]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Maximal biconnected components via the lowpoint method (iterative)."""
    if not g.is_connected():
        raise ToricGraphError("block decomposition requires a connected graph")
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    estack: list[int] = []
    raw_blocks: list[list[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        frames: list[tuple[int, int]] = [(root, 0)]  # (vertex, adjacency cursor)
        while frames:
            v, cursor = frames[-1]
            inc = g.incident(v)
            descended = False
            while cursor < len(inc):
                eid, w = inc[cursor]
                cursor += 1
                if eid == parent_edge[v]:
                    continue
                if disc[w] == -1:
                    parent_edge[w] = eid
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append(eid)
                    if v == root:
                        root_children += 1
                    frames[-1] = (v, cursor)
                    frames.append((w, 0))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    estack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            frames.pop()
            if frames:
                u = frames[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        eid = estack.pop()
                        block.append(eid)
                        if eid == parent_edge[v]:
                            break
                    raw_blocks.append(block)
                    if u != root:
                        cuts.add(u)
        if root_children >= 2:
            cuts.add(root)
    blocks = tuple(sorted((frozenset(b) for b in raw_blocks), key=min))
    kinds = tuple(_classify(g, b) for b in blocks)
    return BlockDecomposition(
        graph=g, blocks=blocks, cut_vertices=tuple(sorted(cuts)), kinds=kinds
    )


def _classify(g: Graph, block: frozenset[int]) -> str:
    if len(block) == 1:
        return "cut-edge"
    deg: dict[int, int] = {}
    for eid in block:
        for v in g.endpoints(eid):
            deg[v] = deg.get(v, 0) + 1
    if len(deg) == len(block) and all(d == 2 for d in deg.values()):
        return "cycle"
    return "other"


def block_tree(source: Graph | BlockDecomposition) -> BlockTree:
    if isinstance(source, Graph):
        source = block_decomposition(source)
    return BlockTree(source)


def _tree_distances_from(t: BlockTree, b: int) -> tuple[list[int], dict[int, int]]:
    """BFS tree-edge distances from block b to every block and cut vertex."""
    dist_b = [-1] * t.block_count
    dist_c: dict[int, int] = {}
    dist_b[b] = 0
    frontier_blocks = [b]
    d = 0
    while frontier_blocks:
        next_cuts = []
        for blk in frontier_blocks:
            for v in t.block_cuts[blk]:
                if v not in dist_c:
                    dist_c[v] = d + 1
                    next_cuts.append(v)
        frontier_blocks = []
        for v in next_cuts:
            for blk in t.cut_blocks[v]:
                if dist_b[blk] == -1:
                    dist_b[blk] = d + 2
                    frontier_blocks.append(blk)
        d += 2
    return dist_b, dist_c


def block_distance(t: BlockTree, b1: int, b2: int) -> int:
    """Internal block nodes on the tree path between two blocks."""
    for b in (b1, b2):
        if not (0 <= b < t.block_count):
            raise ToricGraphError(f"unknown block id {b}")
    if b1 == b2:
        return 0
    dist_b, _ = _tree_distances_from(t, b1)
    d = dist_b[b2]
    if d < 0:
        raise ToricGraphError("blocks are in different components")
    return d // 2 - 1


def max_block_distance(t: BlockTree) -> int:
    """Maximum block distance over all block pairs (tree diameter, two sweeps)."""
    if t.block_count <= 1:
        return 0
    dist_b, _ = _tree_distances_from(t, 0)
    far = max(range(t.block_count), key=lambda b: dist_b[b])
    dist_b, _ = _tree_distances_from(t, far)
    best = max(dist_b)
    return best // 2 - 1 if best >= 2 else 0
