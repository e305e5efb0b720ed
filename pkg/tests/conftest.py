"""Shared fixtures: the worked 3x7 example, the 3x6 counterexample to the
earlier published sign argument, and the 2x2 family with non-unique
representations."""

from fractions import Fraction

import pytest

from arimat import IntMatrix, Representation


# 3x7 matrix in basic form on {1,2,3} with diagonal (1,2,3); its circuit
# graph is connected and the all-positive normalization flips columns 7, 6
# and row 1.
EXAMPLE_37 = IntMatrix([
    [1, 0, 0, -4, 0, 3, 0],
    [0, 2, 0, 1, 2, 0, -2],
    [0, 0, 3, 0, 1, -1, -1],
])

# The sign-normalized form of EXAMPLE_37.
EXAMPLE_37_POSITIVE = IntMatrix([
    [1, 0, 0, 4, 0, 3, 0],
    [0, 2, 0, 1, 2, 0, 2],
    [0, 0, 3, 0, 1, 1, 1],
])

# Support of the non-basis block of EXAMPLE_37.
EXAMPLE_37_INCIDENCE = IntMatrix([
    [1, 0, 1, 0],
    [1, 1, 0, 1],
    [0, 1, 1, 1],
])

# 3x6 matrix with a unimodular basis block whose bottom-right entry cannot
# be made positive while preserving all other signs.
COUNTEREX_36 = IntMatrix([
    [1, 0, 0, 1, 0, 1],
    [0, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 1, -1],
])


def x_ab(a: int, b: int) -> IntMatrix:
    """Upper triangular 2x2 with fixed multiplicity table for gcd(a,b)=1."""
    return IntMatrix([[1, a], [0, b]])


@pytest.fixture
def ex37():
    return Representation(EXAMPLE_37)


@pytest.fixture
def ex37_positive():
    return Representation(EXAMPLE_37_POSITIVE)


@pytest.fixture
def counterex36():
    return Representation(COUNTEREX_36)


def frac(p, q=1):
    return Fraction(p, q)


# ---------------------------------------------------------------------------
# independent slow oracles used to derive expected values


def det_cofactor(m: IntMatrix) -> int:
    """Cofactor-expansion determinant, independent of the fraction-free path."""
    n = m.nrows
    if n == 0:
        return 1
    if n == 1:
        return m.entries[0][0]
    total = 0
    for j in range(n):
        minor = IntMatrix(
            [[row[k] for k in range(n) if k != j] for row in m.entries[1:]],
            ncols=n - 1,
        )
        total += (-1) ** j * m.entries[0][j] * det_cofactor(minor)
    return total


def rank_fractions(m: IntMatrix) -> int:
    """Gaussian elimination over exact rationals."""
    rows = [[Fraction(e) for e in r] for r in m.entries]
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def random_weakly_multiplicative(count, seed, max_d=4, max_n=8, bound=5):
    """Seeded full-rank matrices that admit a multiplicative basis."""
    import random

    from arimat import rank
    from arimat.matroid import first_multiplicative_basis

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_d)
        n = rng.randint(d, max_n)
        m = IntMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(d)])
        if rank(m) < d:
            continue
        x = Representation(m)
        if first_multiplicative_basis(x) is not None:
            out.append(x)
    return out
