import random

import pytest

from toricgraph import (
    EnumerationCapError,
    GraverSet,
    ToricConfiguration,
    ToricGraphError,
    circuits_bruteforce,
    graver_completion,
    incidence_configuration,
    is_conformally_minimal,
    kernel_lattice_basis,
)
from toricgraph.graver import _complete
from toricgraph.vectors import canonical_sign
from oracles import bounded_kernel_vectors, conformal_minimal_set, minimal_support_set

TWISTED_CUBIC = ToricConfiguration([[1, 1, 1, 1], [0, 1, 2, 3]])
SMALL_CONFIGS = {
    "four-cycle": ToricConfiguration([[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]),
    "sum-relation": ToricConfiguration([[1, 0, 1], [0, 1, 1]]),
    "twisted-cubic": TWISTED_CUBIC,
    "index-two": ToricConfiguration([[2, 1, 0, 1], [0, 1, 2, 0]]),
    "three-by-two": ToricConfiguration([[2, 1, 1, 1], [1, 2, 1, 0]]),
}


class TestKernelLatticeBasis:
    def test_four_cycle_kernel(self, corpus):
        basis = kernel_lattice_basis(incidence_configuration(corpus["square"]))
        assert basis.cols == 1
        assert canonical_sign(basis.column(0)) == (1, -1, 1, -1)

    def test_triangle_kernel_trivial(self, corpus):
        basis = kernel_lattice_basis(incidence_configuration(corpus["triangle"]))
        assert basis.cols == 0

    def test_sum_relation(self):
        basis = kernel_lattice_basis(SMALL_CONFIGS["sum-relation"])
        assert basis.cols == 1
        assert canonical_sign(basis.column(0)) == (1, 1, -1)

    def test_columns_really_span_the_kernel(self):
        # every small kernel vector must be an integer combination of the basis
        from itertools import product

        for name, a in SMALL_CONFIGS.items():
            basis = kernel_lattice_basis(a)
            for j in range(basis.cols):
                assert all(x == 0 for x in a.multiply(basis.column(j))), name
            cols = [basis.column(j) for j in range(basis.cols)]
            span = set()
            for combo in product(range(-6, 7), repeat=len(cols)):
                span.add(
                    tuple(
                        sum(c * col[i] for c, col in zip(combo, cols))
                        for i in range(a.column_count)
                    )
                )
            assert bounded_kernel_vectors(a.rows, 2) <= span, name


class TestGraverCompletion:
    def test_four_cycle(self, corpus):
        gset = graver_completion(incidence_configuration(corpus["square"]))
        assert gset.vectors == ((1, -1, 1, -1),)

    def test_sum_relation(self):
        gset = graver_completion(SMALL_CONFIGS["sum-relation"])
        assert gset.vectors == ((1, 1, -1),)

    def test_matches_bounded_exhaustive_oracle(self):
        for name, a in SMALL_CONFIGS.items():
            expected = conformal_minimal_set(bounded_kernel_vectors(a.rows, 6))
            doubled = conformal_minimal_set(bounded_kernel_vectors(a.rows, 12))
            assert expected == doubled, f"{name}: bound 6 is not saturated"
            assert set(graver_completion(a).vectors) == expected, name

    def test_output_is_in_the_kernel_and_pairwise_minimal(self):
        for name, a in SMALL_CONFIGS.items():
            gset = graver_completion(a)
            for v in gset:
                assert all(x == 0 for x in a.multiply(v)), name
                assert is_conformally_minimal(v, gset), name

    def test_order_independence(self):
        rng = random.Random(7)
        for name, a in SMALL_CONFIGS.items():
            reference = graver_completion(a)
            basis = kernel_lattice_basis(a)
            seeds = [tuple(basis.column(j)) for j in range(basis.cols)]
            for _ in range(4):
                shuffled = seeds[:]
                rng.shuffle(shuffled)
                shuffled = [s if rng.random() < 0.5 else tuple(-x for x in s) for s in shuffled]
                assert _complete(shuffled, 10**6) == reference, name

    def test_unpointed_configuration_rejected(self):
        with pytest.raises(ToricGraphError):
            graver_completion(ToricConfiguration([[1, -1], [0, 1]]))
        with pytest.raises(ToricGraphError):
            graver_completion(ToricConfiguration([[1, 0], [1, 0]]))

    def test_cap_is_an_error_not_a_truncation(self, corpus):
        with pytest.raises(EnumerationCapError):
            graver_completion(incidence_configuration(corpus["K_3,3"]), cap=3)


class TestCircuitsBruteforce:
    def test_four_cycle(self, corpus):
        a = incidence_configuration(corpus["square"])
        assert circuits_bruteforce(a) == {(1, -1, 1, -1)}

    def test_triangle_empty(self, corpus):
        assert circuits_bruteforce(incidence_configuration(corpus["triangle"])) == set()

    def test_k4_has_three_degree_two_circuits(self, corpus):
        circuits = circuits_bruteforce(incidence_configuration(corpus["K4"]))
        assert len(circuits) == 3
        assert all(sum(x for x in c if x > 0) == 2 for c in circuits)

    def test_matches_minimal_support_oracle(self):
        for name, a in SMALL_CONFIGS.items():
            expected = minimal_support_set(bounded_kernel_vectors(a.rows, 6))
            assert circuits_bruteforce(a) == expected, name

    def test_circuits_subset_of_graver(self):
        for name, a in SMALL_CONFIGS.items():
            assert circuits_bruteforce(a) <= set(graver_completion(a).vectors), name

    def test_cap(self, corpus):
        a = incidence_configuration(corpus["K_3,3"])
        with pytest.raises(EnumerationCapError):
            circuits_bruteforce(a, cap=10)


class TestConformalMinimality:
    def test_graver_elements_are_minimal(self, corpus):
        gset = graver_completion(incidence_configuration(corpus["K4"]))
        for v in gset:
            assert is_conformally_minimal(v, gset)

    def test_multiples_are_not_minimal(self, corpus):
        gset = graver_completion(incidence_configuration(corpus["square"]))
        assert not is_conformally_minimal((2, -2, 2, -2), gset)

    def test_zero_rejected(self, corpus):
        gset = graver_completion(incidence_configuration(corpus["square"]))
        with pytest.raises(ToricGraphError):
            is_conformally_minimal((0, 0, 0, 0), gset)

    def test_k4_circuits_are_minimal_in_graver(self, corpus):
        a = incidence_configuration(corpus["K4"])
        gset = graver_completion(a)
        for c in circuits_bruteforce(a):
            assert is_conformally_minimal(c, gset)


class TestGraverSet:
    def test_canonicalizes_and_sorts(self):
        s = GraverSet([(-1, 1), (1, -1), (0, 2)])
        assert s.vectors == ((0, 2), (1, -1))
        assert (1, -1) in s
        assert (-1, 1) in s
