import pytest

from toricgraph import (
    Graph,
    GrnParams,
    ToricGraphError,
    block_decomposition,
    block_distance,
    block_tree,
    build_grn,
    max_block_distance,
)


class TestBlockDecomposition:
    def test_bowtie(self, corpus):
        dec = block_decomposition(corpus["bowtie"])
        assert [sorted(b) for b in dec.blocks] == [[0, 1, 2], [3, 4, 5]]
        assert dec.kinds == ("cycle", "cycle")
        assert [dec.graph.label(v) for v in dec.cut_vertices] == ["a"]

    def test_two_triangles_bridge(self, corpus):
        dec = block_decomposition(corpus["two-triangles-bridge"])
        assert len(dec.blocks) == 3
        assert sorted(dec.kinds) == ["cut-edge", "cycle", "cycle"]
        assert len(dec.cut_vertices) == 2

    def test_g13_blocks_are_triangles(self, corpus):
        dec = block_decomposition(corpus["G_1^3"])
        assert len(dec.blocks) == 4
        assert all(kind == "cycle" for kind in dec.kinds)
        assert all(len(b) == 3 for b in dec.blocks)
        assert len(dec.cut_vertices) == 3

    def test_biconnected_graph_is_one_block(self, corpus):
        dec = block_decomposition(corpus["K4"])
        assert len(dec.blocks) == 1
        assert dec.kinds == ("other",)
        assert dec.cut_vertices == ()

    def test_blocks_partition_the_edges(self, corpus):
        for name, g in corpus.items():
            dec = block_decomposition(g)
            union = sorted(e for b in dec.blocks for e in b)
            assert union == list(range(g.edge_count)), name

    def test_disconnected_rejected(self):
        g = Graph.from_edge_labels([("a", "b"), ("c", "d")])
        with pytest.raises(ToricGraphError):
            block_decomposition(g)

    def test_cut_vertex_iff_in_two_or_more_blocks(self, corpus):
        for name, g in corpus.items():
            tree = block_tree(g)
            dec = tree.decomposition
            membership = {v: 0 for v in range(g.vertex_count)}
            for b in range(len(dec.blocks)):
                for v in dec.block_vertices(b):
                    membership[v] += 1
            for v, count in membership.items():
                assert (count >= 2) == (v in set(dec.cut_vertices)), (name, v)


class TestBlockTree:
    def test_is_a_tree(self, corpus):
        for name, g in corpus.items():
            t = block_tree(g)
            assert t.node_count() == t.edge_count() + 1, name

    def test_leaves_are_blocks(self, corpus):
        for name, g in corpus.items():
            t = block_tree(g)
            if t.block_count < 2:
                continue
            degree: dict[tuple[str, int], int] = {}
            for b, v in t.edges():
                degree[("B", b)] = degree.get(("B", b), 0) + 1
                degree[("S", v)] = degree.get(("S", v), 0) + 1
            leaves = [node for node, d in degree.items() if d == 1]
            assert leaves and all(kind == "B" for kind, _ in leaves), name


class TestBlockDistance:
    def test_same_block_is_zero(self, corpus):
        t = block_tree(corpus["G_1^3"])
        assert block_distance(t, 1, 1) == 0

    def test_g13_leaf_pair(self, corpus):
        t = block_tree(corpus["G_1^3"])
        # two leaf triangles see only the root triangle between them
        assert block_distance(t, 1, 2) == 1
        # adjacent blocks (through one cut vertex) are at distance 0
        assert block_distance(t, 0, 1) == 0

    def test_g33_deepest_leaves(self):
        g = build_grn(GrnParams(3, 3))
        t = block_tree(g)
        assert max_block_distance(t) == 5
        pairs = [
            (b1, b2)
            for b1 in range(t.block_count)
            for b2 in range(b1 + 1, t.block_count)
        ]
        assert max(block_distance(t, b1, b2) for b1, b2 in pairs) == 5

    def test_unknown_block_rejected(self, corpus):
        t = block_tree(corpus["bowtie"])
        with pytest.raises(ToricGraphError):
            block_distance(t, 0, 9)


class TestMaxBlockDistance:
    def test_single_block(self, corpus):
        assert max_block_distance(block_tree(corpus["K4"])) == 0

    def test_small_family_values(self, corpus):
        assert max_block_distance(block_tree(corpus["G_1^3"])) == 1
        assert max_block_distance(block_tree(corpus["G_2^3"])) == 3

    def test_matches_exhaustive_pairs(self, corpus):
        for name in ("bowtie", "two-triangles-bridge", "G_2^3"):
            t = block_tree(corpus[name])
            best = max(
                block_distance(t, b1, b2)
                for b1 in range(t.block_count)
                for b2 in range(t.block_count)
            )
            assert max_block_distance(t) == best, name
