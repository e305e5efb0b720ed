"""Brute-force ground truth used to validate the fast paths.

Everything here is exhaustive or exhaustively randomized: subset-table
equality over all 2^N subsets, equivalence by trying all 2^N column sign
patterns against the left Hermite normal form, multiplicity through the
gcd of maximal minors, and a randomized check of canonical-form
invariance.  Caps raise TooLarge rather than approximate.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import DimensionMismatch, TooLarge
from .intlinalg import (
    IntMatrix,
    UnimodularWitness,
    det,
    hnf_left_canonical,
    inverse_unimodular,
    unimodular_random,
)
from .matroid import Representation, full_table, rank_of, _normalize

BRUTEFORCE_CAP = 16


@dataclass(frozen=True)
class EquivalenceReport:
    same_matroid: bool
    equivalent: bool
    witness_sign_pattern: tuple[int, ...] | None
    witness_transform: UnimodularWitness | None
    all_sign_patterns: tuple[tuple[int, ...], ...] | None
    notes: str

    def __post_init__(self):
        if self.equivalent and not self.same_matroid:
            raise ValueError("equivalent transforms preserve the matroid")


def same_arithmetic_matroid(x: Representation, y: Representation, cap: int = 22) -> bool:
    """Exhaustive comparison of rank and multiplicity over all subsets."""
    if x.d != y.d or x.n != y.n:
        raise DimensionMismatch("representations live on different ground sets")
    return full_table(x, cap=cap) == full_table(y, cap=cap)


def _signs_of(index: int, n: int) -> tuple[int, ...]:
    return tuple(-1 if index >> j & 1 else 1 for j in range(n))


def equivalent_bruteforce(
    x: Representation,
    y: Representation,
    cap: int = BRUTEFORCE_CAP,
    all_witnesses: bool = False,
) -> EquivalenceReport:
    """Decide equivalence by exhausting the 2^N column sign patterns.

    For each diagonal D the left-unimodular part is settled by comparing
    left Hermite forms; the first witness in binary counting order is
    reported, together with the composed transform T with y = T * x * D.
    """
    if x.d != y.d or x.n != y.n:
        raise DimensionMismatch("representations live on different ground sets")
    if x.n > cap:
        raise TooLarge(f"2^{x.n} sign patterns exceeds cap 2^{cap}")
    same = same_arithmetic_matroid(x, y)
    if x.n == 0:
        ident = UnimodularWitness.of(IntMatrix.identity(x.d))
        return EquivalenceReport(True, True, (), ident, ((),) if all_witnesses else None,
                                 "empty ground set")
    hy, ty = hnf_left_canonical(y.matrix)
    ty_inv = inverse_unimodular(ty)
    first_signs = None
    first_transform = None
    found = []
    for index in range(1 << x.n):
        signs = _signs_of(index, x.n)
        hx, tx = hnf_left_canonical(x.matrix.scale_columns(signs))
        if hx != hy:
            continue
        if first_signs is None:
            first_signs = signs
            first_transform = UnimodularWitness.of(ty_inv * tx.matrix)
        if not all_witnesses:
            break
        found.append(signs)
    if first_signs is None:
        note = "same arithmetic matroid, no transform" if same else "different matroids"
        return EquivalenceReport(same, False, None, None,
                                 tuple(found) if all_witnesses else None, note)
    return EquivalenceReport(
        same, True, first_signs, first_transform,
        tuple(found) if all_witnesses else None,
        "witness found by exhaustive sign search",
    )


def multiplicity_gcd_minors(x: Representation, subset) -> int:
    """m(S) as the gcd of all rank-sized minors of the column submatrix.

    Independent of the Smith normal form path: the product of the
    invariant factors equals the top determinantal divisor.
    """
    s = _normalize(subset, x.n)
    if not s:
        return 1
    sub = x.matrix.submatrix(cols=s)
    r = rank_of(x, s)
    if r == 0:
        return 1
    g = 0
    for rows in combinations(range(1, x.d + 1), r):
        for cols in combinations(range(1, len(s) + 1), r):
            g = math.gcd(g, det(sub.submatrix(rows=rows, cols=cols)))
    return g


@dataclass(frozen=True)
class UniquenessFailure:
    trial: int
    transform: IntMatrix
    signs: tuple[int, ...]


@dataclass(frozen=True)
class UniquenessReport:
    trials: int
    seed: int
    failures: tuple[UniquenessFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_uniqueness_theorem(
    x: Representation, trials: int, seed: int, steps: int = 25
) -> UniquenessReport:
    """Randomized invariance check of the canonical form.

    For `trials` random pairs (T, D) the canonical form of T * x * D must
    equal the canonical form of x bit for bit; every counterexample is
    reported with the offending transform pair.
    """
    from .canonical import canonical_form

    reference = canonical_form(x).matrix
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        w = unimodular_random(x.d, rng.randrange(1 << 30), steps)
        signs = tuple(rng.choice((1, -1)) for _ in range(x.n))
        moved = Representation(w.matrix * x.matrix.scale_columns(signs))
        if canonical_form(moved).matrix != reference:
            failures.append(UniquenessFailure(t, w.matrix, signs))
    return UniquenessReport(trials, seed, tuple(failures))
