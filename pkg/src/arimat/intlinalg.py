"""Exact integer linear algebra kernel.

Dense matrices over Python's arbitrary-precision integers: Hermite and
Smith normal forms with transform tracking, fraction-free determinants,
rank, and linear Diophantine solving.  Everything here is a pure function
on immutable values; nothing ever touches floating point.
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass

from .errors import DimensionMismatch, NotABasis, NotFullRank, NotSquare

Row = tuple[int, ...]


class IntMatrix:
    """Immutable dense matrix of exact integers.

    Semantic indexing (`entry`, `row`, `col`, `submatrix`) is 1-based,
    matching the usual labelling of ground-set elements e_1..e_N.  The raw
    row tuples are available 0-based through `entries`.
    """

    __slots__ = ("entries", "nrows", "ncols", "_hash")

    def __init__(self, rows, ncols: int | None = None):
        body = tuple(tuple(operator.index(e) for e in r) for r in rows)
        widths = {len(r) for r in body}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        self.entries: tuple[Row, ...] = body
        self.nrows: int = len(body)
        # ncols is only needed explicitly for matrices with zero rows,
        # which occur as transposes of d x 0 submatrices.
        self.ncols: int = widths.pop() if widths else (ncols or 0)
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def diagonal(cls, values) -> "IntMatrix":
        vals = tuple(values)
        n = len(vals)
        return cls(tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        """Entry at row i, column j (1-based)."""
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> Row:
        return self.entries[i - 1]

    def col(self, j: int) -> Row:
        return tuple(r[j - 1] for r in self.entries)

    def submatrix(self, rows=None, cols=None) -> "IntMatrix":
        """Submatrix on the given 1-based row and column index lists."""
        ri = range(self.nrows) if rows is None else [i - 1 for i in rows]
        ci = range(self.ncols) if cols is None else [j - 1 for j in cols]
        return IntMatrix(tuple(tuple(self.entries[i][j] for j in ci) for i in ri))

    def transpose(self) -> "IntMatrix":
        if self.nrows == 0 or self.ncols == 0:
            return IntMatrix(tuple(() for _ in range(self.ncols)), ncols=self.nrows)
        return IntMatrix(tuple(zip(*self.entries)))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        bt = other.transpose().entries
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in bt) for r in self.entries)
        )

    def mul_vec(self, v) -> Row:
        vec = tuple(v)
        if self.ncols != len(vec):
            raise DimensionMismatch("matrix-vector size mismatch")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.entries)

    def scale_columns(self, signs) -> "IntMatrix":
        """New matrix with column j multiplied by signs[j-1] (each +1 or -1)."""
        s = tuple(signs)
        if len(s) != self.ncols or any(x not in (1, -1) for x in s):
            raise ValueError("signs must be a +/-1 vector of length ncols")
        return IntMatrix(tuple(tuple(a * x for a, x in zip(r, s)) for r in self.entries))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries \
            and self.ncols == other.ncols

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.entries, self.ncols))
        return self._hash

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.entries))!r})"

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in r) for r in self.entries)


@dataclass(frozen=True)
class UnimodularWitness:
    """A square integer matrix together with its verified determinant (+1 or -1)."""

    matrix: IntMatrix
    determinant: int

    def __post_init__(self):
        d = det(self.matrix)
        if d not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det={d})")
        if d != self.determinant:
            raise ValueError("claimed determinant is wrong")

    @classmethod
    def of(cls, matrix: IntMatrix) -> "UnimodularWitness":
        return cls(matrix, det(matrix))


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form U*M*W = diag(diagonal) padded with zeros.

    The diagonal holds the positive invariant factors s_1 | s_2 | ... | s_r.
    """

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix
    rank: int

    def __post_init__(self):
        ds = self.diagonal
        if any(s <= 0 for s in ds):
            raise ValueError("invariant factors must be positive")
        if any(ds[k + 1] % ds[k] for k in range(len(ds) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")

    @property
    def product(self) -> int:
        p = 1
        for s in self.diagonal:
            p *= s
        return p

    def padded(self, nrows: int, ncols: int) -> IntMatrix:
        return IntMatrix(
            tuple(
                tuple(self.diagonal[i] if i == j and i < len(self.diagonal) else 0
                      for j in range(ncols))
                for i in range(nrows)
            )
        )


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _rowop_gcd(a: list[list[int]], t: list[list[int]], r1: int, r2: int, col: int) -> None:
    """Unimodular row operation on rows r1, r2 making a[r2][col] = 0.

    Afterwards a[r1][col] = +/- gcd of the two previous entries.  When the
    pivot already divides the target, the pivot row is left untouched;
    this keeps the alternating eliminations in snf() terminating.
    """
    x, y = a[r1][col], a[r2][col]
    if y == 0:
        return
    if x == 0:
        a[r1], a[r2] = a[r2], a[r1]
        t[r1], t[r2] = t[r2], t[r1]
        return
    if y % x == 0:
        q = y // x
        a[r2] = [e2 - q * e1 for e1, e2 in zip(a[r1], a[r2])]
        t[r2] = [e2 - q * e1 for e1, e2 in zip(t[r1], t[r2])]
        return
    g, u, v = _egcd(x, y)
    p, q = -(y // g), x // g
    for m in (a, t):
        row1, row2 = m[r1], m[r2]
        m[r1] = [u * e1 + v * e2 for e1, e2 in zip(row1, row2)]
        m[r2] = [p * e1 + q * e2 for e1, e2 in zip(row1, row2)]


def _negate_row(a: list[list[int]], t: list[list[int]], i: int) -> None:
    a[i] = [-e for e in a[i]]
    t[i] = [-e for e in t[i]]


def _reduce_above(a: list[list[int]], t: list[list[int]], pr: int, col: int) -> None:
    """Reduce entries above the pivot a[pr][col] into [0, pivot)."""
    p = a[pr][col]
    for i in range(pr):
        q = a[i][col] // p
        if q:
            a[i] = [e - q * f for e, f in zip(a[i], a[pr])]
            t[i] = [e - q * f for e, f in zip(t[i], t[pr])]


def _mutable(m: IntMatrix) -> list[list[int]]:
    return [list(r) for r in m.entries]


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = _mutable(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def rank(m: IntMatrix) -> int:
    """Rational rank, computed by exact integer row reduction."""
    a = _mutable(m)
    t = [[] for _ in range(m.nrows)]  # no transform needed
    pr = 0
    for col in range(m.ncols):
        if pr == m.nrows:
            break
        for i in range(pr + 1, m.nrows):
            _rowop_gcd(a, t, pr, i, col)
        if a[pr][col] != 0:
            pr += 1
    return pr


def hnf_basis_form(m: IntMatrix, basis_cols) -> tuple[IntMatrix, UnimodularWitness]:
    """Hermite normal form with pivots placed on the given columns.

    The k-th pivot lands at row k, column basis_cols[k]: that block becomes
    upper triangular with positive diagonal and entries above each pivot
    reduced into [0, pivot).  Columns stay in their original order; the
    transform satisfies T*m = H exactly.
    """
    cols = tuple(basis_cols)
    d, n = m.nrows, m.ncols
    if len(cols) != d or len(set(cols)) != d or any(not 1 <= c <= n for c in cols):
        raise NotABasis(f"basis columns must be {d} distinct indices in 1..{n}")
    if rank(m) < d:
        raise NotFullRank(f"rank is less than {d}")
    a = _mutable(m)
    t = _mutable(IntMatrix.identity(d))
    for k, c in enumerate(cols):
        col = c - 1
        for i in range(k + 1, d):
            _rowop_gcd(a, t, k, i, col)
        if a[k][col] == 0:
            raise NotABasis("basis columns are linearly dependent")
        if a[k][col] < 0:
            _negate_row(a, t, k)
        _reduce_above(a, t, k, col)
    return IntMatrix(a), UnimodularWitness.of(IntMatrix(t))


def hnf_left_canonical(m: IntMatrix) -> tuple[IntMatrix, UnimodularWitness]:
    """Unique Hermite normal form for the orbit {T*m : T unimodular}.

    Pivot columns are chosen greedily left to right; pivots are positive
    with reduced entries above.  Two full-row-rank matrices have equal
    output iff they differ by a left unimodular factor.
    """
    d = m.nrows
    a = _mutable(m)
    t = _mutable(IntMatrix.identity(d))
    pr = 0
    for col in range(m.ncols):
        if pr == d:
            break
        for i in range(pr + 1, d):
            _rowop_gcd(a, t, pr, i, col)
        if a[pr][col] == 0:
            continue
        if a[pr][col] < 0:
            _negate_row(a, t, pr)
        _reduce_above(a, t, pr, col)
        pr += 1
    if pr < d:
        raise NotFullRank(f"rank {pr} is less than {d}")
    return IntMatrix(a), UnimodularWitness.of(IntMatrix(t))


def inverse_unimodular(w: UnimodularWitness) -> IntMatrix:
    """Exact integer inverse of a unimodular matrix."""
    h, tr = hnf_left_canonical(w.matrix)
    if h != IntMatrix.identity(w.matrix.nrows):
        raise ValueError("matrix is not unimodular")
    return tr.matrix


def _colop_gcd(a, w, c1, c2, row):
    """Column analogue of _rowop_gcd, mirrored on the right transform w."""
    x, y = a[row][c1], a[row][c2]
    if y == 0:
        return
    if x == 0:
        for m in (a, w):
            for r in m:
                r[c1], r[c2] = r[c2], r[c1]
        return
    if y % x == 0:
        q = y // x
        for m in (a, w):
            for r in m:
                r[c2] -= q * r[c1]
        return
    g, u, v = _egcd(x, y)
    p, q = -(y // g), x // g
    for m in (a, w):
        for r in m:
            e1, e2 = r[c1], r[c2]
            r[c1] = u * e1 + v * e2
            r[c2] = p * e1 + q * e2


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form with both transforms.

    Alternating row/column eliminations with a smallest-entry pivot rule,
    followed by a divisibility fix-up; returns positive invariant factors
    s_1 | ... | s_r together with unimodular U, W such that U*m*W is the
    padded diagonal.
    """
    d, n = m.nrows, m.ncols
    a = _mutable(m)
    u = _mutable(IntMatrix.identity(d))
    w = _mutable(IntMatrix.identity(n))
    t = 0
    while True:
        best = None
        for i in range(t, d):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        pi, pj = best
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for mm in (a, w):
                for r in mm:
                    r[t], r[pj] = r[pj], r[t]
        while True:
            for i in range(t + 1, d):
                _rowop_gcd(a, u, t, i, t)
            for j in range(t + 1, n):
                _colop_gcd(a, w, t, j, t)
            if all(a[i][t] == 0 for i in range(t + 1, d)):
                break
        if a[t][t] < 0:
            _negate_row(a, u, t)
        t += 1
    r = t
    for i in range(r):
        for j in range(i + 1, r):
            if a[j][j] % a[i][i] == 0:
                continue
            av, bv = a[i][i], a[j][j]
            g, uu, vv = _egcd(av, bv)
            # col_i += col_j, then a 2x2 unimodular row mix, then clean col_j:
            # diag(av, bv) -> diag(gcd, lcm).
            for mm in (a, w):
                for row in mm:
                    row[i] += row[j]
            for mm in (a, u):
                r1, r2 = mm[i], mm[j]
                mm[i] = [uu * e1 + vv * e2 for e1, e2 in zip(r1, r2)]
                mm[j] = [-(bv // g) * e1 + (av // g) * e2 for e1, e2 in zip(r1, r2)]
            f = vv * bv // g
            for mm in (a, w):
                for row in mm:
                    row[j] -= f * row[i]
    diag = tuple(a[k][k] for k in range(r))
    return SnfResult(diag, IntMatrix(u), IntMatrix(w), r)


def solve_diophantine(m: IntMatrix, b) -> tuple[Row, list[Row]] | None:
    """Solve m*x = b over the integers.

    Returns (particular solution, kernel basis) when solvable, None
    otherwise.  The kernel basis generates the full integer kernel and is
    normalized by left Hermite reduction so the output is deterministic.
    """
    bvec = tuple(operator.index(e) for e in b)
    if len(bvec) != m.nrows:
        raise DimensionMismatch("right-hand side has wrong length")
    s = snf(m)
    c = s.left.mul_vec(bvec)
    y = []
    for k in range(m.ncols):
        if k < s.rank:
            if c[k] % s.diagonal[k]:
                return None
            y.append(c[k] // s.diagonal[k])
        else:
            y.append(0)
    if any(c[k] != 0 for k in range(s.rank, m.nrows)):
        return None
    particular = s.right.mul_vec(y)
    kernel = [s.right.col(k + 1) for k in range(s.rank, m.ncols)]
    if kernel:
        h, _ = hnf_left_canonical(IntMatrix(kernel))
        kernel = list(h.entries)
    return particular, kernel


def unimodular_random(d: int, seed: int, steps: int) -> UnimodularWitness:
    """Deterministic pseudo-random unimodular matrix.

    Product of `steps` elementary row operations (bounded shear, swap, or
    negation) drawn from a seeded generator; steps = 0 gives the identity.
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    rng = random.Random(seed)
    a = _mutable(IntMatrix.identity(d))
    for _ in range(steps):
        kind = rng.randrange(3) if d > 1 else 2
        if kind == 0:
            i = rng.randrange(d)
            j = rng.randrange(d - 1)
            if j >= i:
                j += 1
            c = rng.choice((-3, -2, -1, 1, 2, 3))
            a[i] = [e + c * f for e, f in zip(a[i], a[j])]
        elif kind == 1:
            i = rng.randrange(d)
            j = rng.randrange(d - 1)
            if j >= i:
                j += 1
            a[i], a[j] = a[j], a[i]
        else:
            i = rng.randrange(d)
            a[i] = [-e for e in a[i]]
    return UnimodularWitness.of(IntMatrix(a))
