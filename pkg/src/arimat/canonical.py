"""Basic forms, sign normalization, and the canonical representative.

A weakly multiplicative arithmetic matroid determines its representing
matrix up to a left unimodular factor and column sign flips.  This module
makes that uniqueness effective: it computes a deterministic orbit
representative (diagonal block on the lexicographically smallest
multiplicative basis, all coordinatizing-path entries positive), tests
equivalence of two representations with an explicit witness, and
enumerates all representations sharing a given basic form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .circuitgraph import (
    Edge,
    Forest,
    coordinatizing_path,
    elimination_order,
    incidence,
    kappa,
)
from .errors import (
    DimensionMismatch,
    NotMultiplicative,
    NotWeaklyMultiplicative,
    PathMismatch,
    TooLarge,
)
from .intlinalg import IntMatrix, UnimodularWitness, hnf_basis_form, inverse_unimodular
from .matroid import Representation, first_multiplicative_basis, _normalize

ENUMERATION_CAP = 20

Flip = tuple[str, int]  # ("row", i) or ("col", j), 1-based, original indices


@dataclass(frozen=True)
class BasicForm:
    """A representation with a positive diagonal block on a basis.

    `matrix` keeps the original column order; `basis` and `nonbasis` record
    where the two groups of columns sit.  `a_block` is the non-basis part,
    its k-th column carrying the bipartite-graph label d+k.  The witness
    transform satisfies transform.matrix * X_original * diag(signs) ==
    matrix, and `flips` lists the line flips of the most recent sign
    normalization (a row flip silently includes the compensating flip of
    its basis column, which keeps the diagonal positive).
    """

    basis: tuple[int, ...]
    nonbasis: tuple[int, ...]
    diag: tuple[int, ...]
    a_block: IntMatrix
    matrix: IntMatrix
    transform: UnimodularWitness
    signs: tuple[int, ...]
    flips: tuple[Flip, ...] = ()

    @property
    def d(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        return self.matrix.ncols


@dataclass(frozen=True)
class SignVector:
    """Target signs on the edges of a coordinatizing path.

    Each entry multiplies the original matrix entry at its edge, so +1
    means "keep" and -1 means "flip relative to the input".
    """

    items: tuple[tuple[Edge, int], ...]
    _map: dict = field(default_factory=dict, compare=False, repr=False)

    def sign(self, edge: Edge) -> int:
        if not self._map:
            self._map.update(dict(self.items))
        return self._map[edge]

    def domain(self) -> frozenset[Edge]:
        return frozenset(e for e, _ in self.items)

    @classmethod
    def from_mapping(cls, mapping) -> "SignVector":
        items = tuple(sorted(mapping.items()))
        if any(s not in (1, -1) for _, s in items):
            raise ValueError("signs must be +1 or -1")
        return cls(items)

    @classmethod
    def constant(cls, path: Forest, sign: int = 1) -> "SignVector":
        return cls.from_mapping({e: sign for e in path.edges})

    @classmethod
    def all_positive(cls, form: BasicForm, path: Forest) -> "SignVector":
        """Signs that make every path entry of the given form positive."""
        d = form.d
        mapping = {}
        for i, j in path.edges:
            a = form.a_block.entry(i, j - d)
            mapping[(i, j)] = 1 if a > 0 else -1
        return cls.from_mapping(mapping)


@dataclass(frozen=True)
class CanonicalRep:
    """Deterministic orbit representative with the transform that reaches it."""

    matrix: IntMatrix
    basis: tuple[int, ...]
    forest: Forest
    transform: UnimodularWitness
    signs: tuple[int, ...]


def basic_form(x: Representation, basis) -> BasicForm:
    """Hermite-reduce on the given multiplicative basis.

    The basis block of the result is diagonal and positive; if the Hermite
    form comes out triangular but not diagonal, the basis was not
    multiplicative and NotMultiplicative is raised.
    """
    b = _normalize(basis, x.n)
    h, t = hnf_basis_form(x.matrix, b)
    d = x.d
    for k, c in enumerate(b):
        col = h.col(c)
        if any(col[i] != 0 for i in range(d) if i != k):
            raise NotMultiplicative(
                f"basis {b} gives a triangular but non-diagonal block"
            )
    diag = tuple(h.entry(k + 1, c) for k, c in enumerate(b))
    nonbasis = tuple(j for j in range(1, x.n + 1) if j not in set(b))
    a_block = h.submatrix(cols=nonbasis) if nonbasis else IntMatrix(
        tuple(() for _ in range(d))
    )
    return BasicForm(
        basis=b,
        nonbasis=nonbasis,
        diag=diag,
        a_block=a_block,
        matrix=h,
        transform=t,
        signs=(1,) * x.n,
    )


def _assemble(form: BasicForm, a_rows: list[list[int]]) -> IntMatrix:
    """Rebuild the full matrix from the diagonal block and a working copy
    of the A block, preserving the original column order."""
    d, n = form.d, form.n
    pos_of_basis = {c: k for k, c in enumerate(form.basis)}
    pos_of_nonbasis = {c: k for k, c in enumerate(form.nonbasis)}
    rows = []
    for i in range(d):
        row = []
        for c in range(1, n + 1):
            if c in pos_of_basis:
                k = pos_of_basis[c]
                row.append(form.diag[k] if k == i else 0)
            else:
                row.append(a_rows[i][pos_of_nonbasis[c]])
        rows.append(row)
    return IntMatrix(rows, ncols=n)


def sign_normalize(form: BasicForm, path: Forest, sigma: SignVector) -> BasicForm:
    """Realize the prescribed signs on all path entries by line flips.

    Walks the deterministic elimination order of the path backwards; at
    each step the eliminated vertex owns one path edge, and its line (a
    row or a column) is flipped exactly when that entry still has the
    wrong sign.  Later steps never disturb entries fixed earlier, so one
    sweep suffices.  Row flips are compensated by flipping the matching
    basis column, keeping the diagonal block positive.
    """
    d, n = form.d, form.n
    inc = incidence(form.a_block)
    if path.d != d or path.n != n:
        raise PathMismatch(
            f"path is on {path.d}+{path.n - path.d} vertices, matrix needs {d}+{n - d}"
        )
    support = set(inc.edges())
    if any(e not in support for e in path.edges):
        raise PathMismatch("path uses an edge at a zero entry")
    if len(path.edges) != n - kappa(inc):
        raise PathMismatch("path does not span every component")
    if sigma.domain() != frozenset(path.edges):
        raise PathMismatch("sign vector domain differs from the path")

    target = {
        (i, j): sigma.sign((i, j)) * form.a_block.entry(i, j - d)
        for i, j in path.edges
    }
    a = [list(r) for r in form.a_block.entries]
    row_flip = [1] * d
    col_flip = [1] * n  # original column indices
    flips: list[Flip] = []
    order = elimination_order(path)
    for v, (i, j) in reversed(order.steps):
        if a[i - 1][j - d - 1] == target[(i, j)]:
            continue
        if v <= d:
            a[v - 1] = [-e for e in a[v - 1]]
            row_flip[v - 1] = -row_flip[v - 1]
            basis_col = form.basis[v - 1]
            col_flip[basis_col - 1] = -col_flip[basis_col - 1]
            flips.append(("row", v))
        else:
            k = v - d - 1
            for row in a:
                row[k] = -row[k]
            orig = form.nonbasis[k]
            col_flip[orig - 1] = -col_flip[orig - 1]
            flips.append(("col", orig))
    new_matrix = _assemble(form, a)
    r = IntMatrix.diagonal(row_flip)
    new_t = UnimodularWitness.of(r * form.transform.matrix)
    new_signs = tuple(s * c for s, c in zip(form.signs, col_flip))
    return BasicForm(
        basis=form.basis,
        nonbasis=form.nonbasis,
        diag=form.diag,
        a_block=IntMatrix(a, ncols=form.a_block.ncols),
        matrix=new_matrix,
        transform=new_t,
        signs=new_signs,
        flips=tuple(flips),
    )


def canonical_form(x: Representation) -> CanonicalRep:
    """The deterministic representative of the equivalence class of x.

    Pipeline: lexicographically smallest multiplicative basis, Hermite
    reduction to a diagonal basic form, deterministic coordinatizing path,
    sign normalization making every path entry positive.  Equivalent
    inputs give bit-identical output; the witness satisfies
    transform * x * diag(signs) == matrix.
    """
    b = first_multiplicative_basis(x)
    if b is None:
        raise NotWeaklyMultiplicative(
            "no multiplicative basis; the representation is not unique"
        )
    form = basic_form(x, b)
    path = coordinatizing_path(incidence(form.a_block))
    sigma = SignVector.all_positive(form, path)
    normalized = sign_normalize(form, path, sigma)
    return CanonicalRep(
        matrix=normalized.matrix,
        basis=b,
        forest=path,
        transform=normalized.transform,
        signs=normalized.signs,
    )


def equivalent(
    x: Representation, y: Representation
) -> tuple[UnimodularWitness, tuple[int, ...]] | None:
    """Decide whether y = T * x * D for unimodular T and a +/-1 diagonal D.

    Returns the witness (T, diagonal of D) or None.  Both weakly
    multiplicative: canonical forms are compared and the witnesses
    composed.  Exactly one weakly multiplicative: the arithmetic matroids
    differ, so the answer is no.  Neither: fall back to the exhaustive
    sign-pattern search.
    """
    if x.d != y.d or x.n != y.n:
        raise DimensionMismatch(
            f"shapes {x.d}x{x.n} and {y.d}x{y.n} differ"
        )
    if x.n == 0:
        return UnimodularWitness.of(IntMatrix.identity(x.d)), ()
    try:
        cx = canonical_form(x)
    except NotWeaklyMultiplicative:
        cx = None
    try:
        cy = canonical_form(y)
    except NotWeaklyMultiplicative:
        cy = None
    if (cx is None) != (cy is None):
        return None  # weak multiplicativity is a matroid invariant
    if cx is None and cy is None:
        from .oracle import equivalent_bruteforce

        report = equivalent_bruteforce(x, y)
        if not report.equivalent:
            return None
        return report.witness_transform, report.witness_sign_pattern
    if cx.matrix != cy.matrix:
        return None
    t = UnimodularWitness.of(inverse_unimodular(cy.transform) * cx.transform.matrix)
    d = tuple(a * b for a, b in zip(cx.signs, cy.signs))
    assert t.matrix * x.matrix.scale_columns(d) == y.matrix
    return t, d


def enumerate_basic_reps(
    x: Representation, basis, cap: int = ENUMERATION_CAP
) -> list[IntMatrix]:
    """All representations of the arithmetic matroid of x that share this
    basic form: one matrix per sign pattern on the coordinatizing path,
    2^(N - kappa) in total, in binary counting order over the path edges
    (bit set = negative entry)."""
    form = basic_form(x, basis)
    path = coordinatizing_path(incidence(form.a_block))
    k = len(path.edges)
    if k > cap:
        raise TooLarge(f"2^{k} sign patterns exceeds cap 2^{cap}")
    base = sign_normalize(form, path, SignVector.all_positive(form, path))
    out = []
    for index in range(1 << k):
        sigma = SignVector.from_mapping(
            {e: -1 if index >> b & 1 else 1 for b, e in enumerate(path.edges)}
        )
        out.append(sign_normalize(base, path, sigma).matrix)
    return out


def stratum_size(x: Representation) -> int:
    """Number of representations of the arithmetic matroid of x in the
    integer Grassmannian: 2^(N - kappa) computed from any basic form."""
    b = first_multiplicative_basis(x)
    if b is None:
        raise NotWeaklyMultiplicative(
            "stratum size formula needs a multiplicative basis"
        )
    form = basic_form(x, b)
    return 1 << (x.n - kappa(incidence(form.a_block)))
