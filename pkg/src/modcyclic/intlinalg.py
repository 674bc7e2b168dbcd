"""Exact integer linear algebra: Hermite/Smith normal forms, congruence
solving and kernels modulo a lattice.

Conventions, fixed repo-wide: vectors are rows, relation systems and lattice
bases are matrix *rows*, and linear maps act by right multiplication
(``x -> x @ A``).  All arithmetic uses Python's unbounded integers;
intermediate entries may exceed any machine width and that is fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class DimensionError(ValueError):
    """Matrix/vector shapes are incompatible."""


class NotUnimodularError(ValueError):
    """A matrix expected to be invertible over the integers is not."""


class InfiniteCodomainError(ValueError):
    """A lattice expected to have full rank (finite quotient) does not."""


class IntMatrix:
    """Immutable dense integer matrix, row major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Iterable[Iterable[int]]):
        entries = tuple(tuple(int(x) for x in row) for row in data)
        if len(entries) != rows:
            raise DimensionError(f"expected {rows} rows, got {len(entries)}")
        for row in entries:
            if len(row) != cols:
                raise DimensionError(f"expected {cols} columns, got {len(row)}")
        self.rows = rows
        self.cols = cols
        self.data = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        if cols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls(n, n, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def row(self, i: int) -> tuple:
        return self.data[i]

    def entry(self, i: int, j: int) -> int:
        return self.data[i][j]

    def diagonal_entries(self) -> list:
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def to_lists(self) -> list:
        return [list(row) for row in self.data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def take_columns(self, idxs: Sequence[int]) -> "IntMatrix":
        return IntMatrix(self.rows, len(idxs), [[row[j] for j in idxs] for row in self.data])

    def take_rows(self, idxs: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(idxs), self.cols, [self.data[i] for i in idxs])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            acc = out[i]
            for k, x in enumerate(row):
                if x:
                    orow = other.data[k]
                    for j, y in enumerate(orow):
                        if y:
                            acc[j] += x * y
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, {self.to_lists()!r})"


def vec_mat(v: Sequence[int], m: IntMatrix) -> list:
    """Row vector times matrix, skipping zero vector entries."""
    if len(v) != m.rows:
        raise DimensionError(f"vector of length {len(v)} times {m.rows}x{m.cols}")
    out = [0] * m.cols
    for i, vi in enumerate(v):
        if vi:
            row = m.data[i]
            for j, x in enumerate(row):
                if x:
                    out[j] += vi * x
    return out


def xgcd(a: int, b: int) -> tuple:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form d = u @ m @ v with u, v unimodular.

    Diagonal entries of d are nonnegative and form a divisibility chain
    d[0] | d[1] | ...; all off-diagonal entries are zero.
    """

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    def invariant_factors(self) -> list:
        return [x for x in self.d.diagonal_entries() if x != 0]


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form over the integers.

    Pivoting is deterministic (smallest absolute nonzero entry, row-major
    tie break) so repeated runs of anything built on top produce identical
    transforms.
    """
    r, c = m.rows, m.cols
    a = m.to_lists()
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def row_addmul(i, k, q):
        ai, ak = a[i], a[k]
        for j in range(c):
            ai[j] += q * ak[j]
        ui, uk = u[i], u[k]
        for j in range(r):
            ui[j] += q * uk[j]

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def col_addmul(j, k, q):
        for row in a:
            row[j] += q * row[k]
        for row in v:
            row[j] += q * row[k]

    def col_swap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    t = 0
    while t < r and t < c:
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)

        while True:
            dirty = False
            for i in range(t + 1, r):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_addmul(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, c):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_addmul(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                break
        if a[t][t] < 0:
            row_neg(t)

        # The pivot must divide every entry of the trailing block, or the
        # diagonal would not be a divisibility chain.
        p = a[t][t]
        fix = None
        for i in range(t + 1, r):
            if any(x % p for x in a[i][t + 1:]):
                fix = i
                break
        if fix is not None:
            row_addmul(t, fix, 1)
            continue
        t += 1

    return SnfResult(IntMatrix(r, c, a), IntMatrix(r, r, u), IntMatrix(c, c, v))


def hnf(m: IntMatrix) -> tuple:
    """Row Hermite normal form.

    Returns (h, t) with t unimodular, t @ m = h, pivots positive, entries
    above each pivot reduced into [0, pivot), and zero rows at the bottom.
    """
    r, c = m.rows, m.cols
    a = m.to_lists()
    t = [[1 if i == j else 0 for j in range(r)] for i in range(r)]

    def row_addmul(i, k, q):
        ai, ak = a[i], a[k]
        for j in range(c):
            ai[j] += q * ak[j]
        ti, tk = t[i], t[k]
        for j in range(r):
            ti[j] += q * tk[j]

    p = 0
    for j in range(c):
        if p == r:
            break
        pivot_row = next((i for i in range(p, r) if a[i][j]), None)
        if pivot_row is None:
            continue
        if pivot_row != p:
            a[p], a[pivot_row] = a[pivot_row], a[p]
            t[p], t[pivot_row] = t[pivot_row], t[p]
        for i in range(p + 1, r):
            if not a[i][j]:
                continue
            ap, ai = a[p][j], a[i][j]
            if ai % ap == 0:
                row_addmul(i, p, -(ai // ap))
                continue
            g, s, tt = xgcd(ap, ai)
            x, y = ap // g, ai // g
            rp, ri = a[p], a[i]
            a[p] = [s * rp[k] + tt * ri[k] for k in range(c)]
            a[i] = [x * ri[k] - y * rp[k] for k in range(c)]
            tp, ti = t[p], t[i]
            t[p] = [s * tp[k] + tt * ti[k] for k in range(r)]
            t[i] = [x * ti[k] - y * tp[k] for k in range(r)]
        if a[p][j] < 0:
            a[p] = [-x for x in a[p]]
            t[p] = [-x for x in t[p]]
        piv = a[p][j]
        for i in range(p):
            q = a[i][j] // piv
            if q:
                row_addmul(i, p, -q)
        p += 1

    return IntMatrix(r, c, a), IntMatrix(r, r, t)


def invert_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1."""
    if m.rows != m.cols:
        raise NotUnimodularError("not square")
    h, t = hnf(m)
    if h != IntMatrix.identity(m.rows):
        raise NotUnimodularError("matrix is not unimodular")
    return t


def _echelon_pivots(h: IntMatrix) -> list:
    pivots = []
    for i, row in enumerate(h.data):
        j = next((k for k, x in enumerate(row) if x), None)
        if j is not None:
            pivots.append((i, j))
    return pivots


def _reduce_exact(h: IntMatrix, target: Sequence[int]):
    """Solve v @ h = target exactly for h in row echelon form.

    Returns the coefficient vector over the rows of h, or None when target
    is outside the row span.
    """
    residual = list(target)
    coeffs = [0] * h.rows
    for p, j in _echelon_pivots(h):
        q, rem = divmod(residual[j], h.data[p][j])
        if rem:
            return None
        if q:
            coeffs[p] = q
            row = h.data[p]
            for k in range(j, h.cols):
                if row[k]:
                    residual[k] -= q * row[k]
    if any(residual):
        return None
    return coeffs


def in_lattice(basis: IntMatrix, v: Sequence[int]) -> bool:
    """Membership of a row vector in the row lattice of `basis`."""
    h, _ = hnf(basis)
    return _reduce_exact(h, v) is not None


def solve_congruence(a: IntMatrix, l: IntMatrix, t: Sequence[int]):
    """Find an integer row vector x with x @ a = t modulo the row lattice of l.

    `a` is k x n, `l` spans a sublattice of Z^n (possibly with zero rows),
    and t has length n.  Returns x of length k, or None when no solution
    exists.  Any returned solution is re-verified by substitution.
    """
    if a.cols != l.cols or len(t) != a.cols:
        raise DimensionError("solve_congruence: column counts differ")
    stacked = IntMatrix(a.rows + l.rows, a.cols, list(a.data) + list(l.data))
    h, tr = hnf(stacked)
    coeffs = _reduce_exact(h, t)
    if coeffs is None:
        return None
    w = vec_mat(coeffs, tr)
    x = w[: a.rows]
    check = vec_mat(x, a)
    diff = [check[j] - t[j] for j in range(a.cols)]
    if not in_lattice(l, diff):
        raise RuntimeError("solve_congruence produced an invalid solution")
    return x


def kernel_mod_lattice(a: IntMatrix, l: IntMatrix) -> IntMatrix:
    """Basis of the lattice {x in Z^k : x @ a lies in the row lattice of l}.

    l must span a full-rank sublattice of Z^n so that the codomain Z^n/l is
    finite; then the kernel has full rank k and a k x k basis is returned.
    """
    if a.cols != l.cols:
        raise DimensionError("kernel_mod_lattice: column counts differ")
    n, k = a.cols, a.rows
    hl, _ = hnf(l)
    if len(_echelon_pivots(hl)) < n:
        raise InfiniteCodomainError("lattice does not have full rank; codomain is infinite")
    rows = []
    for i in range(k):
        rows.append(list(a.data[i]) + [1 if j == i else 0 for j in range(k)])
    for row in l.data:
        rows.append(list(row) + [0] * k)
    h, _ = hnf(IntMatrix(k + len(l.data), n + k, rows))
    ker = [row[n:] for row in h.data
           if not any(row[:n]) and any(row[n:])]
    if len(ker) != k:
        raise RuntimeError("kernel basis does not have full rank")
    basis, _ = hnf(IntMatrix(k, k, ker))
    return basis
