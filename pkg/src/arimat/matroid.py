"""The arithmetic matroid of an integer matrix.

A full-row-rank matrix X in Z^(d x N) defines a matroid on the column
indices 1..N together with a multiplicity function: m(S) is the index of
the subgroup generated by the columns of S inside its saturation, computed
here as the product of the invariant factors of the column submatrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BadIndex, NotABasis, NotFullRank, TooLarge
from .intlinalg import IntMatrix, det, rank, snf

TABLE_CAP = 22


@dataclass(frozen=True)
class Representation:
    """An integer matrix with full row rank, viewed as a list of N column
    vectors in Z^d labelled 1..N.  N = 0 is allowed as the empty list."""

    matrix: IntMatrix
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.matrix.nrows < 1:
            raise NotFullRank("need at least one row")
        if self.matrix.ncols > 0 and rank(self.matrix) < self.matrix.nrows:
            raise NotFullRank(
                f"matrix of shape {self.matrix.nrows}x{self.matrix.ncols} is rank-deficient"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(j + 1) for j in range(self.matrix.ncols)))
        elif len(self.labels) != self.matrix.ncols:
            raise ValueError("one label per column required")

    @property
    def d(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        return self.matrix.ncols

    def ground_set(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))


@dataclass(frozen=True)
class SubsetProfile:
    subset: tuple[int, ...]
    rank: int
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")


@dataclass(frozen=True)
class MatroidTable:
    """Rank and multiplicity of every subset, in binary counting order.

    Bit j-1 of the position index corresponds to element j; equality of two
    tables is the brute-force test for representing the same arithmetic
    matroid on a labelled ground set.
    """

    n: int
    profiles: tuple[SubsetProfile, ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def profile(self, subset) -> SubsetProfile:
        if not self._index:
            self._index.update({p.subset: p for p in self.profiles})
        return self._index[_normalize(subset, self.n)]

    def __len__(self) -> int:
        return len(self.profiles)


def _normalize(subset, n: int) -> tuple[int, ...]:
    s = sorted(set(subset))
    if s and (s[0] < 1 or s[-1] > n):
        raise BadIndex(f"subset {s} not within 1..{n}")
    return tuple(s)


def rank_of(x: Representation, subset) -> int:
    """Rational rank of the column submatrix indexed by `subset`."""
    s = _normalize(subset, x.n)
    if not s:
        return 0
    return rank(x.matrix.submatrix(cols=s))


def multiplicity(x: Representation, subset) -> int:
    """m(S): product of the invariant factors of the columns indexed by S."""
    s = _normalize(subset, x.n)
    if not s:
        return 1
    return snf(x.matrix.submatrix(cols=s)).product


def full_table(x: Representation, cap: int = TABLE_CAP) -> MatroidTable:
    """Profiles of all 2^N subsets; the exhaustive matroid fingerprint."""
    if x.n > cap:
        raise TooLarge(f"2^{x.n} subsets exceeds cap 2^{cap}")
    profiles = []
    for mask in range(1 << x.n):
        s = tuple(j + 1 for j in range(x.n) if mask >> j & 1)
        profiles.append(SubsetProfile(s, rank_of(x, s), multiplicity(x, s)))
    return MatroidTable(x.n, tuple(profiles))


def bases(x: Representation) -> list[tuple[int, ...]]:
    """All size-d column sets with nonzero determinant, lexicographic."""
    out = []
    for combo in combinations(x.ground_set(), x.d):
        if det(x.matrix.submatrix(cols=combo)) != 0:
            out.append(combo)
    return out


def _singleton_multiplicity(x: Representation, j: int) -> int:
    g = 0
    for e in x.matrix.col(j):
        g = math.gcd(g, e)
    return max(g, 1)


def is_multiplicative_basis(x: Representation, basis) -> bool:
    """True iff m(B) equals the product of the m({b}) over b in B.

    The basis multiplicity is |det| of the basis block and each singleton
    multiplicity is the gcd of its column, so this needs no normal form.
    """
    b = _normalize(basis, x.n)
    if len(b) != x.d:
        raise NotABasis(f"expected {x.d} elements, got {len(b)}")
    db = det(x.matrix.submatrix(cols=b))
    if db == 0:
        raise NotABasis(f"columns {b} are dependent")
    prod = 1
    for j in b:
        prod *= _singleton_multiplicity(x, j)
    return abs(db) == prod


def multiplicative_bases(x: Representation) -> list[tuple[int, ...]]:
    """All multiplicative bases, lexicographic; nonempty iff the arithmetic
    matroid is weakly multiplicative."""
    return [b for b in bases(x) if is_multiplicative_basis(x, b)]


def first_multiplicative_basis(x: Representation) -> tuple[int, ...] | None:
    """Lexicographically smallest multiplicative basis, or None."""
    singles = [_singleton_multiplicity(x, j) for j in range(1, x.n + 1)]
    for combo in combinations(x.ground_set(), x.d):
        db = det(x.matrix.submatrix(cols=combo))
        if db == 0:
            continue
        prod = 1
        for j in combo:
            prod *= singles[j - 1]
        if abs(db) == prod:
            return combo
    return None
