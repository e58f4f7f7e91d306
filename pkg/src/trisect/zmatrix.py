"""Exact integer matrix algebra.

Everything here works over arbitrary-precision Python integers: Smith
normal form, determinantal (minor) gcds, cokernel structure, a Hadamard
inequality certificate, and the g-step Fibonacci sequence used to bound
matrix entries along walks.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import InvalidInput

# Above this size, minor gcds come from the Smith normal form instead of
# brute-force enumeration.  Enumeration is kept as the test oracle.
_ENUMERATION_LIMIT = 6


def xgcd(a, b):
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


@dataclass(frozen=True)
class IntMatrix:
    """An immutable rows x cols integer matrix, entries in row-major order.

    >>> IntMatrix.from_rows([[1, 2], [3, 4]]).entry(1, 0)
    3
    """

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows):
        rows = [tuple(int(x) for x in row) for row in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(row) != nc for row in rows):
            raise InvalidInput("ragged rows")
        return cls(nr, nc, tuple(rows))

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def entry(self, i, j):
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(zip(*self.entries)) if self.entries else ())

    def tolist(self):
        return [list(row) for row in self.entries]

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data):
        m = cls.from_rows([[int(x) for x in row] for row in data["entries"]])
        if m.rows != data["rows"] or m.cols != data["cols"]:
            raise InvalidInput("matrix dimensions disagree with entries")
        return m


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_r of a matrix, all positive."""

    invariant_factors: tuple
    rank: int

    def factor_product(self, k):
        """Product d_1 * ... * d_k; zero when k exceeds the rank."""
        if k > self.rank:
            return 0
        out = 1
        for d in self.invariant_factors[:k]:
            out *= d
        return out


def _as_rows(m):
    if isinstance(m, IntMatrix):
        return [list(row) for row in m.entries]
    return [[int(x) for x in row] for row in m]


def _dims(rows):
    return len(rows), len(rows[0]) if rows else 0


def _row_combine(mat, i1, i2, j):
    """Row ops on rows i1, i2 making mat[i1][j] = gcd and mat[i2][j] = 0."""
    a, b = mat[i1][j], mat[i2][j]
    if b == 0:
        return
    if a == 0:
        mat[i1], mat[i2] = mat[i2], mat[i1]
        return
    if b % a == 0:
        q = b // a
        mat[i2] = [x - q * y for x, y in zip(mat[i2], mat[i1])]
        return
    g, x, y = xgcd(a, b)
    ag, bg = a // g, b // g
    r1, r2 = mat[i1], mat[i2]
    mat[i1] = [x * u + y * v for u, v in zip(r1, r2)]
    mat[i2] = [-bg * u + ag * v for u, v in zip(r1, r2)]


def _col_combine(mat, j1, j2, i):
    """Column ops on cols j1, j2 making mat[i][j1] = gcd and mat[i][j2] = 0."""
    a, b = mat[i][j1], mat[i][j2]
    if b == 0:
        return
    if a == 0:
        for row in mat:
            row[j1], row[j2] = row[j2], row[j1]
        return
    if b % a == 0:
        q = b // a
        for row in mat:
            row[j2] -= q * row[j1]
        return
    g, x, y = xgcd(a, b)
    ag, bg = a // g, b // g
    for row in mat:
        u, v = row[j1], row[j2]
        row[j1] = x * u + y * v
        row[j2] = -bg * u + ag * v


def snf(m):
    """Smith normal form of an integer matrix.

    Returns the invariant factors d_1 | d_2 | ... | d_r (all >= 1) and the
    rank r.  The pivot at each stage is the nonzero entry of minimal
    absolute value, ties broken by lowest (row, col), which keeps
    intermediate growth deterministic.

    >>> snf([[2, 0], [0, 3]]).invariant_factors
    (1, 6)
    >>> snf([[0, 0], [0, 0]]).rank
    0
    """
    mat = _as_rows(m)
    nr, nc = _dims(mat)
    diag = []
    t = 0
    while t < min(nr, nc):
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = mat[i][j]
                if v and (pivot is None or (abs(v), i, j) < pivot):
                    pivot = (abs(v), i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != t:
            mat[t], mat[pi] = mat[pi], mat[t]
        if pj != t:
            for row in mat:
                row[t], row[pj] = row[pj], row[t]
        while True:
            for i in range(t + 1, nr):
                _row_combine(mat, t, i, t)
            if any(mat[t][j] for j in range(t + 1, nc)):
                for j in range(t + 1, nc):
                    _col_combine(mat, t, j, t)
            # column ops can reintroduce entries below the pivot
            if all(mat[i][t] == 0 for i in range(t + 1, nr)):
                if all(mat[t][j] == 0 for j in range(t + 1, nc)):
                    d = mat[t][t]
                    bad = next(
                        (i for i in range(t + 1, nr)
                         if any(v % d for v in mat[i])),
                        None,
                    )
                    if bad is None:
                        break
                    # pivot must divide the remaining block; fold the
                    # offending row in and reduce again
                    mat[t] = [u + v for u, v in zip(mat[t], mat[bad])]
        diag.append(abs(mat[t][t]))
        t += 1
    return SnfResult(tuple(diag), len(diag))


def _det(rows):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if mat[i][k]), None)
            if swap is None:
                return 0
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k]
                             - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def _iter_minors(mat, k):
    nr, nc = _dims(mat)
    for rsel in combinations(range(nr), k):
        for csel in combinations(range(nc), k):
            yield _det([[mat[i][j] for j in csel] for i in rsel])


def _check_minor_order(m, k):
    mat = _as_rows(m)
    nr, nc = _dims(mat)
    if not 0 < k <= min(nr, nc):
        raise InvalidInput(f"minor order {k} out of range for {nr}x{nc}")
    return mat


def minors_gcd(m, k):
    """gcd of all k x k minors (0 if they all vanish).

    Equals the product of the first k invariant factors whenever the rank
    is at least k; computed from the Smith form on larger matrices and by
    direct enumeration otherwise.

    >>> minors_gcd([[2, 0, 0], [0, 3, 0]], 2)
    6
    """
    mat = _check_minor_order(m, k)
    if min(_dims(mat)) > _ENUMERATION_LIMIT:
        return snf(mat).factor_product(k)
    return minors_gcd_enumerated(mat, k)


def minors_gcd_enumerated(m, k):
    """Brute-force gcd of all k x k minors; the oracle for :func:`snf`."""
    mat = _check_minor_order(m, k)
    g = 0
    for d in _iter_minors(mat, k):
        g = gcd(g, d)
        if g == 1:
            return 1
    return g


def max_abs_minor(m, k):
    """Largest absolute value of a k x k minor.

    >>> max_abs_minor([[2, 4]], 1)
    4
    """
    mat = _check_minor_order(m, k)
    return max(abs(d) for d in _iter_minors(mat, k))


def cokernel(m):
    """Structure of Z^rows / (column span of m).

    Returns (free_rank, torsion) with the torsion coefficients > 1 listed
    in divisibility order.

    >>> cokernel([[2, 0, 0]])
    (0, [2])
    >>> cokernel([[0], [0]])
    (2, [])
    """
    mat = _as_rows(m)
    nr, _ = _dims(mat)
    result = snf(mat)
    torsion = [d for d in result.invariant_factors if d > 1]
    return nr - result.rank, torsion


def hadamard_holds(m):
    """Certify det(m)^2 <= product of squared row norms, exactly.

    True for every square integer matrix; exposed as a checkable
    certificate for the determinant estimates used downstream.
    """
    mat = _as_rows(m)
    nr, nc = _dims(mat)
    if nr != nc:
        raise InvalidInput("hadamard_holds needs a square matrix")
    lhs = _det(mat) ** 2
    rhs = 1
    for row in mat:
        rhs *= sum(x * x for x in row)
    return lhs <= rhs


class FibGStep:
    """The g-step Fibonacci sequence.

    F_0 = F_1 = 1, F_n = 0 for n < 0, and F_n is the sum of the previous
    g values for n >= 2.  Values are cached per instance.

    >>> [FibGStep(3).value(n) for n in range(6)]
    [1, 1, 2, 4, 7, 13]
    """

    def __init__(self, step):
        if step < 1:
            raise InvalidInput("step must be >= 1")
        self.step = step
        self._cache = [1, 1]

    def value(self, n):
        if n < 0:
            return 0
        cache = self._cache
        while len(cache) <= n:
            m = len(cache)
            cache.append(sum(cache[max(0, m - self.step):m]))
        return cache[n]


def fib_gstep(g, n):
    """Value F_n of the g-step Fibonacci sequence; F_n <= 2**(n-1) for n >= 1.

    >>> fib_gstep(2, 4)
    5
    >>> fib_gstep(4, -3)
    0
    """
    return FibGStep(g).value(n)
