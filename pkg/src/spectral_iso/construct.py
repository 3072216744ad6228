"""Build an explicit isomorphism by individualization and re-refinement.

Starting from the stable partition of :func:`refine_fixpoint`, each round
picks the first non-singleton class x, its lowest vertex i in graph 1 and
lowest vertex j in graph 2, gives both the fresh diagonal 4(c+1)n, and
re-splits. Once every class is a singleton the two signature tables are
paired row by row. The resulting permutation is always checked edge by
edge before being returned as an isomorphism.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Union

from .bigmat import DiagonalAssignment, SignatureTable
from .graph import Graph, Permutation, first_violation, is_isomorphism
from .refine import (
    MatchedPartition,
    Mismatch,
    NotIsomorphic,
    Stable,
    assign_diagonals,
    refine_fixpoint,
    refine_step,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Choice:
    """One individualization: class ``x`` (0-based), vertex ``i`` of graph 1, ``j`` of graph 2."""

    x: int
    i: int
    j: int
    c: int
    value: int


@dataclass(frozen=True)
class VerifiedIsomorphism:
    p: Permutation
    trace: tuple = ()
    refine_history: tuple = ()
    max_entries: tuple = ()


@dataclass(frozen=True)
class CandidateFailed:
    """The engine could not produce a valid map although refinement was stable.

    Either the final discrete pairing ``p`` fails verification (``violation``
    is the first vertex pair whose adjacency it breaks), or an
    individualization round produced different sorted signature lists
    (``p`` is None and ``mismatch`` holds the witness).
    """

    p: Optional[Permutation]
    violation: Optional[tuple] = None
    mismatch: Optional[Mismatch] = None
    trace: tuple = ()
    refine_history: tuple = ()
    max_entries: tuple = ()


@dataclass(frozen=True)
class NotIsomorphicMap:
    witness: Mismatch
    refine_history: tuple = ()
    exhausted: Optional[Choice] = None
    max_entries: tuple = field(default=(), repr=False)


MapOutcome = Union[VerifiedIsomorphism, NotIsomorphicMap, CandidateFailed]


def individualize_step(
    partition: MatchedPartition, n: int, j_index: int = 0
) -> tuple[DiagonalAssignment, DiagonalAssignment, Choice]:
    """Diagonals for one individualization round.

    ``j_index`` selects which member of C2_x pairs with i (0 = lowest).
    """
    target = next((x for x, (a, _) in enumerate(partition.classes) if len(a) > 1), None)
    if target is None:
        raise ValueError("every class is a singleton; nothing to individualize")
    a, b = partition.classes[target]
    i, j = min(a), sorted(b)[j_index]
    c = partition.c
    value = 4 * (c + 1) * n
    d1, d2 = assign_diagonals(partition, n)
    v1, v2 = list(d1.values), list(d2.values)
    v1[i] = value
    v2[j] = value
    return DiagonalAssignment(tuple(v1)), DiagonalAssignment(tuple(v2)), Choice(target, i, j, c, value)


def permutation_from_discrete(sig1: SignatureTable, sig2: SignatureTable) -> Permutation:
    """Map the rank-r row holder of table 1 to the rank-r row holder of table 2."""
    if sig1.n != sig2.n:
        raise ValueError("tables differ in size")
    for name, sig in (("first", sig1), ("second", sig2)):
        if len(set(sig.rows)) != sig.n:
            raise ValueError(f"{name} table has repeated rows; partition is not discrete")
    order1 = sorted(range(sig1.n), key=sig1.rows.__getitem__)
    order2 = sorted(range(sig2.n), key=sig2.rows.__getitem__)
    image = [0] * sig1.n
    for u, v in zip(order1, order2):
        if sig1.rows[u] != sig2.rows[v]:
            raise ValueError("sorted row sequences differ between the tables")
        image[u] = v
    return Permutation(tuple(image))


def _literal_diagonals(prev: Optional[tuple], choice: Choice):
    """Diagonals under the persistent reading: previous values, only i and j overwritten."""
    if prev is None:
        return None
    v1, v2 = list(prev[0].values), list(prev[1].values)
    v1[choice.i] = choice.value
    v2[choice.j] = choice.value
    return DiagonalAssignment(tuple(v1)), DiagonalAssignment(tuple(v2))


def construct_isomorphism(g: Graph, h: Graph, retry_j: bool = False, persistent: bool = False) -> MapOutcome:
    """Run refinement, individualize until discrete, and verify the induced map.

    ``retry_j`` (beyond the plain procedure) tries the other members of
    C2_x when a round fails. If every candidate fails in the first round,
    the graphs are proven non-isomorphic: any isomorphism respects the
    stable classes and would make one of the candidates succeed.

    ``persistent`` keeps the previous round's diagonals and only overwrites
    i and j, instead of reassigning 4n*x per current class.
    """
    out = refine_fixpoint(g, h)
    if isinstance(out, NotIsomorphic):
        return NotIsomorphicMap(out.witness, out.history, max_entries=out.max_entries)
    assert isinstance(out, Stable)
    n = g.n
    history = out.history
    partition, sig1, sig2 = out.partition, out.sig1, out.sig2
    biggest = list(out.max_entries)
    trace: list[Choice] = []
    prev = assign_diagonals(out.partition, n) if n else None
    rounds = 0
    while partition.c < n:
        rounds += 1
        if rounds > n:
            raise AssertionError(f"more than n={n} individualization rounds")
        width = next(len(b) for _, b in partition.classes if len(b) > 1)
        attempts = range(width) if retry_j else range(1)
        last_miss = None
        for j_index in attempts:
            d1, d2, choice = individualize_step(partition, n, j_index)
            literal = _literal_diagonals(prev, choice)
            if literal is not None and (literal[0].violations() or literal[1].violations()):
                log.info("persistent diagonals would break separation at round %d: %s",
                         rounds, literal[0].violations() + literal[1].violations())
            if persistent and literal is not None:
                d1, d2 = literal
            result, s1, s2 = refine_step(g, h, d1, d2)
            biggest.append(max(s1.max_entry, s2.max_entry))
            if isinstance(result, Mismatch):
                last_miss = (choice, result)
                continue
            if result.c <= partition.c:
                raise AssertionError("individualization did not increase the class count")
            trace.append(choice)
            partition, sig1, sig2 = result, s1, s2
            prev = (d1, d2)
            break
        else:
            choice, miss = last_miss
            trace.append(choice)
            if retry_j and rounds == 1:
                return NotIsomorphicMap(miss, history, exhausted=choice, max_entries=tuple(biggest))
            return CandidateFailed(None, None, miss, tuple(trace), history, tuple(biggest))
    p = permutation_from_discrete(sig1, sig2)
    if is_isomorphism(g, h, p):
        return VerifiedIsomorphism(p, tuple(trace), history, tuple(biggest))
    return CandidateFailed(p, first_violation(g, h, p), None, tuple(trace), history, tuple(biggest))
