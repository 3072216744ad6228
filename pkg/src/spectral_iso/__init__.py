"""Exact-arithmetic spectral-signature graph isomorphism engine."""
from .bigmat import (
    BigSymMatrix,
    DiagonalAssignment,
    IntMatrix,
    SignatureTable,
    embed_with_diagonal,
    multiply,
    signature_table,
)
from .construct import (
    CandidateFailed,
    NotIsomorphicMap,
    VerifiedIsomorphism,
    construct_isomorphism,
    individualize_step,
    permutation_from_discrete,
)
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .graph import (
    Graph,
    Permutation,
    apply_permutation,
    compose,
    generate_random_graph,
    invert,
    is_isomorphism,
)
from .oracle import OracleRefused, color_refinement, exact_isomorphism
from .refine import (
    MatchedPartition,
    Mismatch,
    NotIsomorphic,
    Stable,
    assign_diagonals,
    refine_fixpoint,
    split_classes,
)

__version__ = "0.1.0"
