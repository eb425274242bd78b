import pytest

from toricgraph import (
    EnumerationCapError,
    Graph,
    ToricGraphError,
    connected_edge_subsets,
    doubled_graph,
    eulerian_trail,
    graver_completion,
    graver_from_graph,
    grn_primitive_binomial,
    has_proper_conformal_subwalk,
    incidence_configuration,
    is_primitive_subgraph,
)


class TestIsPrimitiveSubgraph:
    def test_even_cycle_accepted(self, corpus):
        verdict = is_primitive_subgraph(corpus["square"])
        assert verdict.primitive
        assert verdict.reason == "even cycle"

    def test_odd_cycle_rejected(self, corpus):
        verdict = is_primitive_subgraph(corpus["triangle"])
        assert not verdict.primitive

    def test_bowtie_accepted_with_odd_parts(self, corpus):
        verdict = is_primitive_subgraph(corpus["bowtie"])
        assert verdict.primitive
        assert verdict.reason == "valid block structure"

    def test_square_pendant_triangle_rejected_on_parity(self, corpus):
        verdict = is_primitive_subgraph(corpus["square-pendant-triangle"])
        assert not verdict.primitive
        assert verdict.failing_cut_vertex == "a"
        assert sorted(verdict.part_edge_totals) == [3, 4]

    def test_rejection_confirmed_by_completion_engine(self, corpus):
        # no Graver element of the 7-edge graph is supported on all edges,
        # so the full subgraph indeed carries no primitive walk
        g = corpus["square-pendant-triangle"]
        gset = graver_completion(incidence_configuration(g))
        full = frozenset(range(g.edge_count))
        assert all(frozenset(i for i, x in enumerate(v) if x) != full for v in gset)

    def test_cut_vertex_in_three_blocks_rejected(self):
        # three triangles glued at one vertex
        g = Graph.from_edge_labels(
            [
                ("a", "b"), ("b", "c"), ("c", "a"),
                ("a", "d"), ("d", "e"), ("e", "a"),
                ("a", "f"), ("f", "g"), ("g", "a"),
            ]
        )
        verdict = is_primitive_subgraph(g)
        assert not verdict.primitive
        assert verdict.failing_cut_vertex == "a"
        assert verdict.reason == "a cut vertex belongs to more than two blocks"

    def test_non_cycle_block_rejected(self, corpus):
        g = corpus["K4"]
        extended = Graph(
            list(g.labels) + ["e"], list(g.edges) + [(0, 4)]
        )
        verdict = is_primitive_subgraph(extended)
        assert not verdict.primitive
        assert verdict.reason == "a block is neither a cycle nor a cut edge"

    def test_biconnected_non_cycle_rejected(self, corpus):
        verdict = is_primitive_subgraph(corpus["K4"])
        assert not verdict.primitive
        assert verdict.reason == "biconnected but not an even cycle"

    def test_pure_path_rejected(self):
        g = Graph.from_edge_labels([("a", "b"), ("b", "c")])
        verdict = is_primitive_subgraph(g)
        assert not verdict.primitive
        assert verdict.part_edge_totals == (0, 0)

    def test_disconnected_rejected(self):
        g = Graph.from_edge_labels([("a", "b"), ("c", "d")])
        with pytest.raises(ToricGraphError):
            is_primitive_subgraph(g)

    def test_grn_graphs_are_primitive(self, corpus):
        for name in ("G_1^3", "G_2^3"):
            assert is_primitive_subgraph(corpus[name]).primitive


class TestConnectedEdgeSubsets:
    def test_triangle_has_seven(self, corpus):
        subsets = {frozenset(s) for s in connected_edge_subsets(corpus["triangle"])}
        assert len(subsets) == 7

    def test_no_duplicates_and_all_connected(self, corpus):
        g = corpus["two-triangles-bridge"]
        seen = []
        for s in connected_edge_subsets(g):
            sub, _, _ = g.subgraph(s)
            assert sub.is_connected()
            seen.append(frozenset(s))
        assert len(seen) == len(set(seen))

    def test_cap(self, corpus):
        with pytest.raises(EnumerationCapError):
            list(connected_edge_subsets(corpus["K4"], cap=5))


class TestGraverFromGraph:
    def test_four_cycle(self, corpus):
        basis = graver_from_graph(corpus["square"])
        assert {b.exponents for b in basis} == {(1, -1, 1, -1)}

    def test_k4_three_quadrilaterals(self, corpus):
        basis = graver_from_graph(corpus["K4"])
        assert len(basis) == 3
        assert all(b.degree == 2 for b in basis)

    def test_bowtie_single_element(self, corpus):
        basis = graver_from_graph(corpus["bowtie"])
        assert len(basis) == 1
        assert next(iter(basis)).degree == 3

    def test_matches_completion_on_small_corpus(self, small_corpus):
        for name, g in small_corpus.items():
            via_graph = {b.exponents for b in graver_from_graph(g)}
            via_lattice = set(graver_completion(incidence_configuration(g)).vectors)
            assert via_graph == via_lattice, name


class TestSubwalkCharacterization:
    def test_equivalence_on_tiny_graphs(self, corpus):
        # every connected subgraph whose doubled form has even degrees gives an
        # even closed walk; the walk's side-monomial pair belongs to the Graver
        # set exactly when no conformal proper subwalk exists. Walks with equal
        # sides (zero binomial) are outside the statement and skipped.
        from collections import Counter

        for name in ("square", "bowtie", "two-triangles-bridge",
                      "square-pendant-triangle", "K4"):
            g = corpus[name]
            gset = graver_completion(incidence_configuration(g))
            checked = 0
            overlapped = 0
            for edge_ids in connected_edge_subsets(g):
                sub, emap, _ = g.subgraph(edge_ids)
                mg = doubled_graph(sub)
                degs = [0] * len(mg.labels)
                for u, v, _ in mg.edges:
                    degs[u] += 1
                    degs[v] += 1
                if any(d % 2 for d in degs):
                    continue
                walk = eulerian_trail(mg)
                if len(walk) % 2:
                    continue
                plus = Counter(walk.edges[0::2])
                minus = Counter(walk.edges[1::2])
                if plus == minus:
                    continue
                disjoint = not (plus.keys() & minus.keys())
                vec = [0] * g.edge_count
                for e, count in plus.items():
                    vec[emap[e]] += count
                for e, count in minus.items():
                    vec[emap[e]] -= count
                in_graver = disjoint and tuple(vec) in gset
                assert in_graver == (not has_proper_conformal_subwalk(walk, sub)), (
                    name,
                    edge_ids,
                )
                checked += 1
                overlapped += 0 if disjoint else 1
            assert checked > 0, name
            if name == "square-pendant-triangle":
                # the square plus a doubled pendant edge exercises the
                # shared-factor case
                assert overlapped > 0

    def test_odd_length_rejected(self, corpus):
        from toricgraph import ClosedWalk

        with pytest.raises(ToricGraphError):
            has_proper_conformal_subwalk(
                ClosedWalk(edges=(0, 1, 2), start=0), corpus["triangle"]
            )


class TestGrnPrimitiveBinomial:
    def test_closed_form_degrees(self):
        assert grn_primitive_binomial(3, 1).degree == 6
        assert grn_primitive_binomial(3, 2).degree == 15
        assert grn_primitive_binomial(5, 1).degree == 15

    def test_depth_zero_rejected(self):
        with pytest.raises(ToricGraphError):
            grn_primitive_binomial(3, 0)

    def test_depth_one_element_is_in_the_graver_basis(self, corpus):
        g = corpus["G_1^3"]
        gset = graver_completion(incidence_configuration(g))
        assert grn_primitive_binomial(3, 1).exponents in gset
