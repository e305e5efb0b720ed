"""Centred toric arrangement semantics.

Every column of the representation defines a character of the torus
(C*)^d; the arrangement consists of the kernels of those characters.  A
layer is a connected component of an intersection of kernels; layers are
indexed here by a matroid flat together with a rational point q in [0,1)^d
standing for the torus point exp(2*pi*i*q).  Two points lie in the same
component of a flat's intersection exactly when their difference plus
some integer vector lies in the real kernel of the flat's transposed
submatrix, an integer Diophantine condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .errors import NotFullRank, NotOnFlat, TooLarge
from .intlinalg import IntMatrix, snf, solve_diophantine
from .matroid import Representation, multiplicity, rank_of, _normalize

FLATS_CAP = 16
POINT_SWEEP_CAP = 2_000_000

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Flat:
    """A closed subset of the ground set: adding any column inside the
    span of its members leaves it unchanged."""

    elements: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class Layer:
    """One connected component of a flat's intersection of kernels,
    represented by a rational point with entries in [0, 1)."""

    flat: Flat
    point: Point


@dataclass(frozen=True)
class LayerPoset:
    """Layers ordered by reverse inclusion: L <= L' iff L' is inside L.

    `relations` holds every ordered pair (L, L') with L <= L', reflexive
    pairs included.
    """

    layers: tuple[Layer, ...]
    relations: frozenset[tuple[Layer, Layer]]

    def leq(self, a: Layer, b: Layer) -> bool:
        return (a, b) in self.relations

    def bottom(self) -> Layer:
        (b,) = [l for l in self.layers if all((l, m) in self.relations for m in self.layers)]
        return b

    def maximal(self) -> list[Layer]:
        return [
            l for l in self.layers
            if all(m is l or (l, m) not in self.relations for m in self.layers)
        ]

    def covers(self) -> list[tuple[Layer, Layer]]:
        """Pairs (a, b) with a < b and nothing strictly between."""
        strict = {(a, b) for a, b in self.relations if a != b}
        return sorted(
            (
                (a, b)
                for a, b in strict
                if not any((a, c) in strict and (c, b) in strict for c in self.layers)
            ),
            key=lambda p: (self.layers.index(p[0]), self.layers.index(p[1])),
        )


def closure(x: Representation, subset) -> Flat:
    """Smallest flat containing the subset: all columns whose addition
    does not raise the rank."""
    s = _normalize(subset, x.n)
    r = rank_of(x, s)
    elements = tuple(
        j for j in range(1, x.n + 1) if rank_of(x, s + (j,)) == r
    )
    return Flat(elements, r)


def flats(x: Representation, cap: int = FLATS_CAP) -> list[Flat]:
    """All flats, ordered by (rank, elements).

    Each flat is the closure of an independent set, so closures of
    independent subsets of size at most d cover everything.
    """
    if x.n > cap:
        raise TooLarge(f"flat enumeration capped at N <= {cap}")
    found = {}
    for size in range(0, min(x.d, x.n) + 1):
        for combo in combinations(range(1, x.n + 1), size):
            if rank_of(x, combo) != size:
                continue
            f = closure(x, combo)
            found[f.elements] = f
    return sorted(found.values(), key=lambda f: (f.rank, f.elements))


def _on_flat(x: Representation, flat: Flat, q: Point) -> bool:
    if len(q) != x.d:
        return False
    for j in flat.elements:
        val = sum(Fraction(c) * qi for c, qi in zip(x.matrix.col(j), q))
        if val.denominator != 1:
            return False
    return True


def _normalize_point(q) -> Point:
    return tuple(Fraction(v) % 1 for v in q)


def layers_of_flat(x: Representation, flat: Flat) -> list[Layer]:
    """The m(flat) components of the flat's intersection of kernels.

    Parametrized through the Smith normal form of the flat's submatrix:
    with U*M*W diagonal (s_1..s_r), the points U^T applied to
    (c_1/s_1, ..., c_r/s_r, 0, ..., 0) for all residue tuples c hit every
    component exactly once.
    """
    if not flat.elements:
        return [Layer(flat, tuple(Fraction(0) for _ in range(x.d)))]
    sub = x.matrix.submatrix(cols=flat.elements)
    s = snf(sub)
    ut = s.left.transpose()
    out = []
    for residues in product(*(range(f) for f in s.diagonal)):
        p = [Fraction(c, f) for c, f in zip(residues, s.diagonal)]
        p += [Fraction(0)] * (x.d - len(p))
        q = _normalize_point(
            tuple(sum(Fraction(ut.entry(i + 1, k + 1)) * p[k] for k in range(x.d))
                  for i in range(x.d))
        )
        out.append(Layer(flat, q))
    out.sort(key=lambda layer: layer.point)
    return out


def same_component(x: Representation, flat: Flat, q: Point, q2: Point) -> bool:
    """Whether two points of the flat's intersection lie in one connected
    component: solvable iff M^T z = -M^T (q - q2) has an integer solution z."""
    qa, qb = _normalize_point(q), _normalize_point(q2)
    if not _on_flat(x, flat, qa) or not _on_flat(x, flat, qb):
        raise NotOnFlat(f"point not on the intersection of flat {flat.elements}")
    if not flat.elements:
        return True
    mt = x.matrix.submatrix(cols=flat.elements).transpose()
    diff = [a - b for a, b in zip(qa, qb)]
    rhs = []
    for row in mt.entries:
        val = sum(Fraction(c) * di for c, di in zip(row, diff))
        assert val.denominator == 1
        rhs.append(-int(val))
    return solve_diophantine(mt, rhs) is not None


def layer_poset(x: Representation, cap: int = FLATS_CAP) -> LayerPoset:
    """All layers of the arrangement with the reverse-inclusion order."""
    all_layers = []
    for f in flats(x, cap=cap):
        all_layers.extend(layers_of_flat(x, f))
    relations = set()
    for a in all_layers:
        ea = set(a.flat.elements)
        for b in all_layers:
            if not ea <= set(b.flat.elements):
                continue
            if same_component(x, a.flat, a.point, b.point):
                relations.add((a, b))
    return LayerPoset(tuple(all_layers), frozenset(relations))


def _component_count_geometric(x: Representation, basis) -> int:
    """Connected components of the basis columns' common kernel, counted
    by sweeping the rational grid with denominator |det|.

    The intersection is finite, so components are points q in [0,1)^d
    with all character values equal to one.
    """
    from .intlinalg import det

    sub = x.matrix.submatrix(cols=basis)
    dd = abs(det(sub))
    if dd ** x.d > POINT_SWEEP_CAP:
        raise TooLarge(f"grid sweep of size {dd}^{x.d} exceeds cap")
    st = sub.transpose()
    count = 0
    for ks in product(range(dd), repeat=x.d):
        ok = True
        for row in st.entries:
            if sum(c * k for c, k in zip(row, ks)) % dd:
                ok = False
                break
        if ok:
            count += 1
    return count


def geometric_weak_multiplicativity(x: Representation) -> tuple[int, ...] | None:
    """Search for a basis whose intersection has as many components as the
    product of its columns' kernel component counts.

    Works purely with component counts: the intersection over a basis is
    counted by a grid sweep, and a single kernel has gcd(column) many
    components.  Returns the first witnessing basis or None.
    """
    if x.n == 0 or rank_of(x, x.ground_set()) < x.d:
        raise NotFullRank("the arrangement must be essential")
    for combo in combinations(range(1, x.n + 1), x.d):
        if rank_of(x, combo) < x.d:
            continue
        single = 1
        for j in combo:
            g = 0
            for e in x.matrix.col(j):
                g = gcd(g, e)
            single *= max(g, 1)
        if _component_count_geometric(x, combo) == single:
            return combo
    return None
