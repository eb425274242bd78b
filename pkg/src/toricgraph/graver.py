"""Lattice-side oracle: Graver bases by completion and brute-force circuits.

This module works on arbitrary small integer configurations and is the
independent check for the graph-theoretic routes. Kernel vectors are plain
int tuples (see vectors.py for the conformal order).
"""

from collections import deque
from itertools import combinations
from math import comb

from .errors import EnumerationCapError, ToricGraphError, enumeration_cap
from .lattice import IntMatrix, _hnf, rank
from .toric import ToricConfiguration
from .vectors import (
    Vec,
    canonical_sign,
    conformal_le,
    content,
    vec_add,
    vec_neg,
    vec_sub,
)


class GraverSet:
    """Canonical-sign, conformally minimal set of kernel vectors."""

    def __init__(self, vecs):
        self.vectors: tuple[Vec, ...] = tuple(sorted({canonical_sign(v) for v in vecs}))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __contains__(self, v) -> bool:
        return canonical_sign(tuple(v)) in set(self.vectors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraverSet):
            return NotImplemented
        return self.vectors == other.vectors

    def __repr__(self) -> str:
        return f"GraverSet({len(self.vectors)} vectors)"


def kernel_lattice_basis(a: ToricConfiguration) -> IntMatrix:
    """Basis of the full integer kernel lattice {u : A u = 0}, as columns.

    Comes straight out of the column HNF transform: the transform columns
    over the zero columns of H span the kernel saturated.
    """
    h, v, pivots = _hnf([list(row) for row in a.rows])
    ncols = a.column_count
    kernel_cols = range(len(pivots), ncols)
    return IntMatrix([[v[i][j] for j in kernel_cols] for i in range(ncols)])


def _normal_form(h: Vec, active: list[Vec]) -> Vec:
    reduced = True
    while reduced and any(h):
        reduced = False
        for v in active:
            if conformal_le(v, h):
                h = vec_sub(h, v)
                reduced = True
                break
    return h


def graver_completion(a: ToricConfiguration, cap: int | None = None) -> GraverSet:
    """Graver basis by completion with conformal normal-form reduction.

    Start from a kernel lattice basis and its negations; sum pairs, reduce
    each sum to a normal form against the current set, and insert nonzero
    irreducible results until no pair produces anything new. The insertion
    count is capped; exceeding the cap is an error, never a truncated answer.
    """
    for j in range(a.column_count):
        col = a.column(j)
        if any(x < 0 for x in col) or not any(col):
            raise ToricGraphError(
                f"column {j} must be nonnegative and nonzero (pointed configuration)"
            )
    max_insertions = enumeration_cap(cap)
    basis = kernel_lattice_basis(a)
    seeds = [tuple(basis.column(j)) for j in range(basis.cols)]
    return _complete(seeds, max_insertions)


def _complete(seeds: list[Vec], max_insertions: int) -> GraverSet:
    active: list[Vec] = []
    seen: set[Vec] = set()
    queue: deque[tuple[Vec, Vec]] = deque()

    def insert(v: Vec) -> None:
        for w in active:
            queue.append((w, v))
        active.append(v)
        seen.add(v)

    insertions = 0
    for s in seeds:
        for v in (s, vec_neg(s)):
            if any(v) and v not in seen:
                insertions += 1
                insert(v)
    while queue:
        f, g = queue.popleft()
        if f == vec_neg(g):
            continue
        h = _normal_form(vec_add(f, g), active)
        if not any(h) or h in seen:
            continue
        insertions += 1
        if insertions > max_insertions:
            raise EnumerationCapError(f"completion exceeded {max_insertions} insertions")
        insert(h)
    # the fixpoint set can still contain elements reducible by later ones
    canon = sorted({canonical_sign(v) for v in active})
    minimal = [
        u
        for u in canon
        if not any(
            v != u and (conformal_le(v, u) or conformal_le(vec_neg(v), u)) for v in canon
        )
    ]
    return GraverSet(minimal)


def circuits_bruteforce(a: ToricConfiguration, cap: int | None = None) -> set[Vec]:
    """Minimal-support kernel vectors by support-subset sweep.

    A subset S of at most rank+1 columns supports a circuit exactly when its
    submatrix has rank |S|-1 and the one-dimensional kernel has no zero entry
    on S; the emitted vector is content 1 and canonically signed.
    """
    max_subsets = enumeration_cap(cap)
    m = a.column_count
    r = a.rank
    total = sum(comb(m, k) for k in range(2, r + 2))
    if total > max_subsets:
        raise EnumerationCapError(f"{total} support subsets exceed the cap {max_subsets}")
    found: set[Vec] = set()
    for k in range(2, r + 2):
        for subset in combinations(range(m), k):
            sub = [[row[j] for j in subset] for row in a.rows]
            h, v, pivots = _hnf(sub)
            if len(pivots) != k - 1:
                continue
            kernel_vec = [v[i][k - 1] for i in range(k)]
            if any(x == 0 for x in kernel_vec):
                continue
            g = content(kernel_vec)
            full = [0] * m
            for j, x in zip(subset, kernel_vec):
                full[j] = x // g
            found.add(canonical_sign(full))
    return found


def is_conformally_minimal(u, s: GraverSet) -> bool:
    """True iff no element of s other than +-u is conformally below u."""
    u = tuple(u)
    if not any(u):
        raise ToricGraphError("the zero vector has no conformal divisors")
    nu = vec_neg(u)
    for v in s:
        if v == u or v == nu:
            continue
        if conformal_le(v, u) or conformal_le(vec_neg(v), u):
            return False
    return True
