"""Exact integer lattice algebra: Hermite/Smith normal forms and circuit index.

Everything is arbitrary-precision (plain Python ints). The Hermite form is
column-style: H = M*V with V unimodular, pivots descending left to right,
entries left of a pivot reduced into [0, pivot). No modular shortcuts; the
row/column operations are plain Euclidean steps, kept simple on purpose.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ToricGraphError
from .toric import Binomial, ToricConfiguration
from .vectors import content, support


class IntMatrix:
    """Dense integer matrix (row-major lists)."""

    __slots__ = ("data",)

    def __init__(self, rows: "Sequence[Sequence[int]] | IntMatrix"):
        if isinstance(rows, IntMatrix):
            self.data = [row[:] for row in rows.data]
            return
        data = [[int(x) for x in row] for row in rows]
        if data and any(len(r) != len(data[0]) for r in data):
            raise ToricGraphError("ragged matrix")
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def multiply(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ToricGraphError(f"shape mismatch: {self.cols} vs {other.rows}")
        od = other.data
        return IntMatrix(
            [
                [sum(row[k] * od[k][j] for k in range(self.cols)) for j in range(other.cols)]
                for row in self.data
            ]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.data == other.data

    def __repr__(self) -> str:
        return f"IntMatrix({self.data!r})"


@dataclass(frozen=True)
class SNFResult:
    """Diagonal d and unimodular transforms with u * m * v = diag(d)."""

    diagonal: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _col_swap(mats: list[list[list[int]]], j: int, k: int) -> None:
    for m in mats:
        for row in m:
            row[j], row[k] = row[k], row[j]


def _col_axpy(mats: list[list[list[int]]], j: int, k: int, q: int) -> None:
    """column j += q * column k."""
    for m in mats:
        for row in m:
            row[j] += q * row[k]


def _col_combine(mats: list[list[list[int]]], j: int, k: int, p: int, q: int, r: int, s: int) -> None:
    """(col j, col k) <- (p*col j + q*col k, r*col j + s*col k); ps - qr = +-1."""
    for m in mats:
        for row in m:
            a, b = row[j], row[k]
            row[j] = p * a + q * b
            row[k] = r * a + s * b


def _row_axpy(mats: list[list[list[int]]], i: int, k: int, q: int) -> None:
    for m in mats:
        rk = m[k]
        ri = m[i]
        for j in range(len(ri)):
            ri[j] += q * rk[j]


def _row_combine(mats: list[list[list[int]]], i: int, k: int, p: int, q: int, r: int, s: int) -> None:
    for m in mats:
        ri, rk = m[i], m[k]
        for j in range(len(ri)):
            a, b = ri[j], rk[j]
            ri[j] = p * a + q * b
            rk[j] = r * a + s * b


def _hnf(data: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[tuple[int, int]]]:
    """Column HNF core: returns (H, V, pivots) with H = input * V."""
    nrows = len(data)
    ncols = len(data[0]) if data else 0
    h = [row[:] for row in data]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    both = [h, v]
    pivots: list[tuple[int, int]] = []
    col = 0
    for row in range(nrows):
        if col == ncols:
            break
        jnz = next((j for j in range(col, ncols) if h[row][j] != 0), None)
        if jnz is None:
            continue
        if jnz != col:
            _col_swap(both, col, jnz)
        for j in range(col + 1, ncols):
            if h[row][j] == 0:
                continue
            a, b = h[row][col], h[row][j]
            if b % a == 0:
                _col_axpy(both, j, col, -(b // a))
            else:
                g, x, y = _xgcd(a, b)
                _col_combine(both, col, j, x, y, -(b // g), a // g)
        if h[row][col] < 0:
            for m in both:
                for rr in m:
                    rr[col] = -rr[col]
        p = h[row][col]
        for j in range(col):
            q = h[row][j] // p
            if q:
                _col_axpy(both, j, col, -q)
        pivots.append((row, col))
        col += 1
    return h, v, pivots


def hermite_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form: (H, V) with H = m * V, V unimodular."""
    m = IntMatrix(m)
    h, v, _ = _hnf(m.data)
    return IntMatrix(h), IntMatrix(v)


def rank(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    m = IntMatrix(m)
    _, _, pivots = _hnf(m.data)
    return len(pivots)


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> SNFResult:
    """Smith normal form with transforms: u * m * v = diag(d), d_i | d_{i+1}."""
    m = IntMatrix(m)
    nrows, ncols = m.rows, m.cols
    a = [row[:] for row in m.data]
    u = IntMatrix.identity(nrows).data
    v = IntMatrix.identity(ncols).data
    row_mats = [a, u]
    col_mats = [a, v]
    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            for mat in row_mats:
                mat[t], mat[pi] = mat[pi], mat[t]
        if pj != t:
            _col_swap(col_mats, t, pj)
        while True:
            changed = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    p, b = a[t][t], a[i][t]
                    if b % p == 0:
                        _row_axpy(row_mats, i, t, -(b // p))
                    else:
                        g, x, y = _xgcd(p, b)
                        _row_combine(row_mats, t, i, x, y, -(b // g), p // g)
                    changed = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    p, b = a[t][t], a[t][j]
                    if b % p == 0:
                        _col_axpy(col_mats, j, t, -(b // p))
                    else:
                        g, x, y = _xgcd(p, b)
                        _col_combine(col_mats, t, j, x, y, -(b // g), p // g)
                    changed = True
            if not changed:
                break
        if a[t][t] < 0:
            for mat in row_mats:
                for j in range(len(mat[t])):
                    mat[t][j] = -mat[t][j]
        t += 1
    # enforce the divisibility chain among the nonzero diagonal entries
    i = 0
    while i + 1 < t:
        d1, d2 = a[i][i], a[i + 1][i + 1]
        if d2 % d1 == 0:
            i += 1
            continue
        _col_axpy(col_mats, i, i + 1, 1)
        g, x, y = _xgcd(d1, d2)
        _row_combine(row_mats, i, i + 1, x, y, -(d2 // g), d1 // g)
        q = a[i][i + 1] // a[i][i]
        _col_axpy(col_mats, i + 1, i, -q)
        for k in (i, i + 1):
            if a[k][k] < 0:
                for mat in row_mats:
                    for j in range(len(mat[k])):
                        mat[k][j] = -mat[k][j]
        i = max(i - 1, 0)
    diag = tuple(a[i][i] for i in range(limit))
    return SNFResult(diagonal=diag, u=IntMatrix(u), v=IntMatrix(v))


def determinant(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Exact determinant (fraction-free Bareiss elimination)."""
    m = IntMatrix(m)
    if m.rows != m.cols:
        raise ToricGraphError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [row[:] for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_staircase(
    h: IntMatrix, pivots: Sequence[tuple[int, int]], target: Sequence[int]
) -> list[int] | None:
    """Integer solution x of H[:, :k] x = target for a column-HNF H, else None."""
    k = len(pivots)
    data = h.data if isinstance(h, IntMatrix) else h
    x = [0] * k
    for ri, ci in pivots:
        num = target[ri] - sum(data[ri][i] * x[i] for i in range(ci))
        d = data[ri][ci]
        if num % d:
            return None
        x[ci] = num // d
    for r in range(len(data)):
        if sum(data[r][i] * x[i] for i in range(k)) != target[r]:
            return None
    return x


def _validate_circuit(exps: tuple[int, ...], a: ToricConfiguration) -> tuple[int, ...]:
    supp = support(exps)
    if not supp:
        raise ToricGraphError("the zero vector is not a circuit")
    if len(exps) != a.column_count:
        raise ToricGraphError("vector length does not match the configuration")
    if any(x != 0 for x in a.multiply(exps)):
        raise ToricGraphError("vector is not in the kernel of the configuration")
    if content(exps) != 1:
        raise ToricGraphError("circuit entries must be coprime")
    sub = [[row[j] for j in supp] for row in a.rows]
    if rank(sub) != len(supp) - 1:
        raise ToricGraphError("vector does not have minimal support")
    return supp


def circuit_index(c: "Binomial | Sequence[int]", a: ToricConfiguration) -> int:
    """Index of the support sublattice inside its saturation within the column lattice.

    Computed exactly: write each support column in coordinates over an HNF
    basis of the full column lattice, then multiply the nonzero invariant
    factors of that coordinate matrix.
    """
    exps = c.exponents if isinstance(c, Binomial) else tuple(int(x) for x in c)
    supp = _validate_circuit(exps, a)
    h, _, pivots = _hnf([list(row) for row in a.rows])
    hmat = IntMatrix(h)
    coords: list[list[int]] = []
    for j in supp:
        x = solve_staircase(hmat, pivots, a.column(j))
        if x is None:
            raise ToricGraphError("internal error: column outside its own lattice")
        coords.append(x)
    # coords rows are per-column coordinate vectors; transpose to k x |supp|
    coord_matrix = [[coords[i][r] for i in range(len(supp))] for r in range(len(pivots))]
    index = 1
    for d in smith_normal_form(coord_matrix).invariant_factors:
        index *= d
    return index


def true_degree(c: "Binomial | Sequence[int]", a: ToricConfiguration) -> int:
    """degree(c) times circuit_index(c, a)."""
    exps = c.exponents if isinstance(c, Binomial) else tuple(int(x) for x in c)
    deg = sum(x for x in exps if x > 0)
    return deg * circuit_index(exps, a)
