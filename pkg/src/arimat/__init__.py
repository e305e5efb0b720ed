"""Exact computations with arithmetic matroids represented by integer
matrices: canonical forms, equivalence testing, representation counting,
and toric arrangement layer posets."""

from .canonical import (
    BasicForm,
    CanonicalRep,
    SignVector,
    basic_form,
    canonical_form,
    enumerate_basic_reps,
    equivalent,
    sign_normalize,
    stratum_size,
)
from .circuitgraph import (
    CircuitIncidence,
    EliminationOrder,
    Forest,
    coordinatizing_circuit,
    coordinatizing_path,
    elimination_order,
    incidence,
    kappa,
)
from .errors import (
    ArimatError,
    BadIndex,
    DimensionMismatch,
    NotABasis,
    NotFullRank,
    NotMultiplicative,
    NotOnFlat,
    NotSameComponent,
    NotSquare,
    NotWeaklyMultiplicative,
    ParseError,
    PathMismatch,
    TooLarge,
)
from .intlinalg import (
    IntMatrix,
    SnfResult,
    UnimodularWitness,
    det,
    hnf_basis_form,
    hnf_left_canonical,
    inverse_unimodular,
    rank,
    snf,
    solve_diophantine,
    unimodular_random,
)
from .matroid import (
    MatroidTable,
    Representation,
    SubsetProfile,
    bases,
    full_table,
    is_multiplicative_basis,
    multiplicative_bases,
    multiplicity,
    rank_of,
)
from .oracle import (
    EquivalenceReport,
    equivalent_bruteforce,
    multiplicity_gcd_minors,
    same_arithmetic_matroid,
    verify_uniqueness_theorem,
)
from .toric import (
    Flat,
    Layer,
    LayerPoset,
    closure,
    flats,
    geometric_weak_multiplicativity,
    layer_poset,
    layers_of_flat,
    same_component,
)

__version__ = "0.1.0"
