"""Finite simple graphs with stable labeling, plus the walk machinery.

Vertices are identified by their index into an ordered label list; edges by
their index into an ordered edge list. Edge order is load-bearing: it is the
column order of the toric configuration and the tie-breaking order for every
deterministic enumeration.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import EnumerationCapError, ToricGraphError, enumeration_cap


class Graph:
    """Immutable simple undirected graph with string vertex labels."""

    __slots__ = ("_labels", "_index", "_edges", "_adj", "_edge_index")

    def __init__(self, labels: Sequence[str], edges: Sequence[tuple[int, int]]):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ToricGraphError("vertex labels must be unique")
        n = len(labels)
        normalized = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ToricGraphError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ToricGraphError(f"loop at vertex {labels[u]!r} not allowed")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ToricGraphError(f"parallel edge {labels[e[0]]!r}-{labels[e[1]]!r}")
            seen.add(e)
            normalized.append(e)
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._edges = tuple(normalized)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self._edges):
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        self._adj = tuple(tuple(a) for a in adj)
        self._edge_index = {e: i for i, e in enumerate(self._edges)}

    @classmethod
    def from_edge_labels(cls, pairs: Iterable[tuple[str, str]]) -> "Graph":
        """Build from labeled edges; vertex order is first appearance."""
        builder = GraphBuilder()
        for a, b in pairs:
            builder.add_edge(builder.ensure_vertex(a), builder.ensure_vertex(b))
        return builder.graph()

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def vertex_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def label(self, v: int) -> str:
        return self._labels[v]

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ToricGraphError(f"unknown vertex {label!r}") from None

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._edges[eid]

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(edge id, other endpoint) pairs at v, in increasing edge id order."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edge_id(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[e]
        except KeyError:
            raise ToricGraphError(f"no edge {self._labels[e[0]]!r}-{self._labels[e[1]]!r}") from None

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n <= 1:
            return True
        seen = [False] * n
        seen[0] = True
        stack = [0]
        reached = 1
        while stack:
            v = stack.pop()
            for _, w in self._adj[v]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    stack.append(w)
        return reached == n

    def subgraph(self, edge_ids: Iterable[int]) -> tuple["Graph", tuple[int, ...], tuple[int, ...]]:
        """Subgraph spanned by the given edges plus their endpoints.

        Returns (subgraph, edge map, vertex map); the maps translate the
        subgraph's ids back to ids in this graph. Vertex order follows this
        graph's order.
        """
        ids = sorted(set(edge_ids))
        verts = sorted({v for eid in ids for v in self._edges[eid]})
        vmap = {v: i for i, v in enumerate(verts)}
        sub = Graph(
            [self._labels[v] for v in verts],
            [(vmap[u], vmap[v]) for eid in ids for (u, v) in (self._edges[eid],)],
        )
        return sub, tuple(ids), tuple(verts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._labels, self._edges))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


class GraphBuilder:
    """Mutable staging area for constructing graphs incrementally."""

    def __init__(self, base: Graph | None = None):
        if base is None:
            self.labels: list[str] = []
            self.index: dict[str, int] = {}
            self.edges: list[tuple[int, int]] = []
            self._edge_set: set[tuple[int, int]] = set()
            self.degrees: list[int] = []
        else:
            self.labels = list(base.labels)
            self.index = {lab: i for i, lab in enumerate(self.labels)}
            self.edges = list(base.edges)
            self._edge_set = set(base.edges)
            self.degrees = [base.degree(v) for v in range(base.vertex_count)]

    def ensure_vertex(self, label: str) -> int:
        i = self.index.get(label)
        if i is None:
            i = len(self.labels)
            self.labels.append(label)
            self.index[label] = i
            self.degrees.append(0)
        return i

    def add_vertex(self, label: str) -> int:
        if label in self.index:
            raise ToricGraphError(f"duplicate vertex label {label!r}")
        return self.ensure_vertex(label)

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise ToricGraphError(f"loop at vertex {self.labels[u]!r} not allowed")
        e = (u, v) if u < v else (v, u)
        if e in self._edge_set:
            raise ToricGraphError(f"parallel edge {self.labels[e[0]]!r}-{self.labels[e[1]]!r}")
        self._edge_set.add(e)
        self.edges.append(e)
        self.degrees[u] += 1
        self.degrees[v] += 1
        return len(self.edges) - 1

    def graph(self) -> Graph:
        return Graph(self.labels, self.edges)


@dataclass(frozen=True)
class ClosedWalk:
    """A closed walk given as an edge-id sequence plus the starting vertex."""

    edges: tuple[int, ...]
    start: int

    def __len__(self) -> int:
        return len(self.edges)

    def vertex_sequence(self, g: Graph) -> tuple[int, ...]:
        """The implied vertex sequence (length+1 entries); validates the walk."""
        v = self.start
        seq = [v]
        for eid in self.edges:
            a, b = g.endpoints(eid)
            if v == a:
                v = b
            elif v == b:
                v = a
            else:
                raise ToricGraphError(f"walk breaks at edge {eid}: not incident to {g.label(v)!r}")
            seq.append(v)
        if v != self.start:
            raise ToricGraphError("walk is not closed")
        return tuple(seq)


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph used only for the edge-doubled form of a subgraph.

    Each entry of `edges` is (u, v, origin) where origin is the id of the
    simple edge it came from; `doubled` lists the origins present twice.
    """

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]
    doubled: frozenset[int]

    def __post_init__(self) -> None:
        per_origin: dict[int, int] = {}
        for _, _, origin in self.edges:
            per_origin[origin] = per_origin.get(origin, 0) + 1
        for origin, mult in per_origin.items():
            if mult > 2:
                raise ToricGraphError(f"edge {origin} has multiplicity {mult}")
            if (mult == 2) != (origin in self.doubled):
                raise ToricGraphError(f"edge {origin} multiplicity disagrees with doubling mark")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def graph_sum(g1: Graph, g2: Graph, v: int, u: int) -> Graph:
    """Disjoint union of g1 and g2 with vertex u of g2 merged into vertex v of g1."""
    if not (0 <= v < g1.vertex_count):
        raise ToricGraphError(f"vertex id {v} not in first summand")
    if not (0 <= u < g2.vertex_count):
        raise ToricGraphError(f"vertex id {u} not in second summand")
    builder = GraphBuilder(g1)
    vmap: dict[int, int] = {u: v}
    for w in range(g2.vertex_count):
        if w == u:
            continue
        lab = g2.label(w)
        if lab in builder.index:
            raise ToricGraphError(f"label {lab!r} appears in both summands")
        vmap[w] = builder.add_vertex(lab)
    for a, b in g2.edges:
        builder.add_edge(vmap[a], vmap[b])
    return builder.graph()


def cycle_graph(labels: Sequence[str]) -> Graph:
    """Cycle through the given labels in order."""
    n = len(labels)
    if n < 3:
        raise ToricGraphError("a cycle needs at least 3 vertices")
    return Graph(labels, [(i, (i + 1) % n) for i in range(n)])


def add_cycle(g: Graph, v: int, n: int, tag: int | str | None = None) -> Graph:
    """Attach a fresh n-cycle (n odd, >= 3) to vertex v.

    The cycle's own attachment vertex is merged into v; the n-1 new vertices
    get labels "<v's label>/<tag>.1" ... "<v's label>/<tag>.(n-1)". When tag
    is omitted, the smallest positive integer avoiding label collisions is
    used, so repeated attachment at the same vertex stays deterministic.
    """
    if n < 3 or n % 2 == 0:
        raise ToricGraphError(f"cycle length must be odd and >= 3, got {n}")
    if not (0 <= v < g.vertex_count):
        raise ToricGraphError(f"vertex id {v} out of range")
    base = g.label(v)
    if tag is None:
        tag = 1
        while f"{base}/{tag}.1" in g.labels:
            tag += 1
    labels = [f"{base}/{tag}.{i}" for i in range(1, n)]
    builder = GraphBuilder(g)
    ids = [builder.add_vertex(lab) for lab in labels]
    ring = [v, *ids]
    for i in range(n):
        builder.add_edge(ring[i], ring[(i + 1) % n])
    return builder.graph()


def enumerate_cycles(g: Graph, parity: str = "all", cap: int | None = None) -> list[frozenset[int]]:
    """All simple cycles of g as canonical edge-id sets, sorted.

    parity filters by cycle length ("even", "odd", "all"). Enumeration is a
    DFS rooted at each cycle's smallest vertex; the total simple-cycle count
    is capped (cycle counts are exponential in general).
    """
    if parity not in ("even", "odd", "all"):
        raise ToricGraphError(f"parity must be even/odd/all, got {parity!r}")
    max_cycles = enumeration_cap(cap)
    found: list[frozenset[int]] = []
    total = 0
    for s in range(g.vertex_count):
        path_edges: list[int] = []
        path_verts = [s]
        on_path = {s}
        iters = [iter(g.incident(s))]
        while iters:
            step = next(iters[-1], None)
            if step is None:
                iters.pop()
                if path_edges:
                    path_edges.pop()
                    on_path.discard(path_verts.pop())
                continue
            eid, w = step
            if w < s:
                continue
            if w == s:
                # cycle closes; count each once by orienting away from the
                # smaller neighbor of the root
                if len(path_edges) >= 2 and path_verts[1] < path_verts[-1]:
                    total += 1
                    if total > max_cycles:
                        raise EnumerationCapError(f"more than {max_cycles} simple cycles")
                    found.append(frozenset([*path_edges, eid]))
                continue
            if w in on_path:
                continue
            path_edges.append(eid)
            path_verts.append(w)
            on_path.add(w)
            iters.append(iter(g.incident(w)))
    if parity != "all":
        want_even = parity == "even"
        found = [c for c in found if (len(c) % 2 == 0) == want_even]
    return sorted(found, key=sorted)


def cycle_vertices(g: Graph, cycle: Iterable[int]) -> set[int]:
    return {v for eid in cycle for v in g.endpoints(eid)}


def connecting_paths(
    g: Graph, c1: Iterable[int], c2: Iterable[int], cap: int | None = None
) -> list[tuple[int, ...]]:
    """Simple paths from cycle c1 to cycle c2, internally avoiding both.

    The cycles must be vertex-disjoint. Each path is an edge-id sequence
    running from its c1 endpoint to its c2 endpoint; paths are returned in
    lexicographic order of their sorted edge ids.
    """
    v1 = cycle_vertices(g, c1)
    v2 = cycle_vertices(g, c2)
    if v1 & v2:
        raise ToricGraphError("cycles are not vertex-disjoint")
    max_paths = enumeration_cap(cap)
    paths: set[tuple[int, ...]] = set()
    for a in sorted(v1):
        path_edges: list[int] = []
        path_verts = [a]
        internal: set[int] = set()
        iters = [iter(g.incident(a))]
        while iters:
            step = next(iters[-1], None)
            if step is None:
                iters.pop()
                if path_edges:
                    path_edges.pop()
                    internal.discard(path_verts.pop())
                continue
            eid, w = step
            if w in v1:
                continue
            if w in v2:
                if len(paths) >= max_paths:
                    raise EnumerationCapError(f"more than {max_paths} connecting paths")
                paths.add(tuple([*path_edges, eid]))
                continue
            if w in internal:
                continue
            path_edges.append(eid)
            path_verts.append(w)
            internal.add(w)
            iters.append(iter(g.incident(w)))
    return sorted(paths, key=lambda p: (sorted(p), p))


def eulerian_trail(m: MultiGraph) -> ClosedWalk:
    """Closed trail of a multigraph using each edge exactly once.

    Requires a connected multigraph with every vertex of even degree.
    Deterministic: the walk starts at the smallest vertex of positive degree
    and always explores the unused incident edge of smallest id; closed
    subtours are spliced in Hierholzer style.
    """
    n = len(m.labels)
    if not m.edges:
        raise ToricGraphError("multigraph has no edges")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (multi edge id, other)
    for mid, (u, v, _) in enumerate(m.edges):
        adj[u].append((mid, v))
        adj[v].append((mid, u))
    for v in range(n):
        adj[v].sort()
        if len(adj[v]) % 2 != 0:
            raise ToricGraphError(f"vertex {m.labels[v]!r} has odd degree {len(adj[v])}")
    start = min(v for v in range(n) if adj[v])
    seen = [False] * n
    seen[start] = True
    stack = [start]
    reached = 1
    while stack:
        v = stack.pop()
        for _, w in adj[v]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                stack.append(w)
    if reached != n:
        raise ToricGraphError("multigraph is not connected")

    used = [False] * len(m.edges)
    pointer = [0] * n
    vertex_stack = [start]
    edge_stack: list[int] = []
    trail: list[int] = []
    while vertex_stack:
        v = vertex_stack[-1]
        p = pointer[v]
        while p < len(adj[v]) and used[adj[v][p][0]]:
            p += 1
        pointer[v] = p
        if p == len(adj[v]):
            vertex_stack.pop()
            if edge_stack:
                trail.append(edge_stack.pop())
        else:
            mid, w = adj[v][p]
            used[mid] = True
            vertex_stack.append(w)
            edge_stack.append(mid)
    trail.reverse()
    if len(trail) != len(m.edges):
        raise ToricGraphError("multigraph is not connected")
    return ClosedWalk(edges=tuple(m.edges[mid][2] for mid in trail), start=start)


def parse_graph(text: str) -> Graph:
    """Read the edge-list text format: one "label1 label2" per line.

    '#' starts a comment; blank lines are ignored. Vertex order is first
    appearance, edge order is line order.
    """
    builder = GraphBuilder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ToricGraphError(f"line {lineno}: expected two vertex labels, got {line!r}")
        builder.add_edge(builder.ensure_vertex(parts[0]), builder.ensure_vertex(parts[1]))
    return builder.graph()


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph for graphs whose vertex order is first-appearance order."""
    for lab in g.labels:
        if not lab or "#" in lab or any(c.isspace() for c in lab):
            raise ToricGraphError(f"label {lab!r} not representable in the text format")
    return "".join(f"{g.label(u)} {g.label(v)}\n" for u, v in g.edges)


def read_graph_file(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph_file(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
