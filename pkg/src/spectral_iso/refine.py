"""Paired class refinement of two graphs by spectral signature tables.

Each round gives every vertex in class x the diagonal 4n*x, builds
B = D + A for both graphs, computes the signature tables and regroups the
vertices by equal signature rows. Classes are matched across the two graphs
by their shared row and numbered by ascending row. The loop stops at the
first round that does not increase the class count, or as soon as the two
sorted row lists differ.

A stable outcome only means the invariant did not separate the graphs; it
is not a proof of isomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .bigmat import DiagonalAssignment, SignatureTable, graph_signature
from .graph import Graph


@dataclass(frozen=True)
class MatchedPartition:
    """Classes ``(C1_x, C2_x)`` in ascending order of their signature row.

    ``keys[x]`` is the row shared by every member of class x, or ``None``
    for the initial one-class partition that has not been computed yet.
    """

    classes: tuple
    keys: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple((tuple(a), tuple(b)) for a, b in self.classes))
        if not self.keys:
            object.__setattr__(self, "keys", (None,) * len(self.classes))
        else:
            object.__setattr__(self, "keys", tuple(self.keys))

    @classmethod
    def single(cls, n: int) -> "MatchedPartition":
        if n == 0:
            return cls(())
        everyone = tuple(range(n))
        return cls(((everyone, everyone),))

    @property
    def c(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return sum(len(a) for a, _ in self.classes)

    def is_discrete(self) -> bool:
        return all(len(a) == 1 for a, _ in self.classes)

    def class_of(self, side: int) -> list[int]:
        """Class index (0-based) of every vertex of graph ``side`` (0 or 1)."""
        out = [0] * self.n
        for x, pair in enumerate(self.classes):
            for v in pair[side]:
                out[v] = x
        return out

    def check(self, n: int) -> None:
        for side in (0, 1):
            seen = sorted(v for pair in self.classes for v in pair[side])
            if seen != list(range(n)):
                raise ValueError(f"classes of graph {side + 1} do not partition 0..{n - 1}")
        for a, b in self.classes:
            if len(a) != len(b):
                raise ValueError(f"unbalanced class pair {a} / {b}")
        ks = [k for k in self.keys if k is not None]
        if any(k2 <= k1 for k1, k2 in zip(ks, ks[1:])):
            raise ValueError("class keys are not strictly ascending")


@dataclass(frozen=True)
class Mismatch:
    """Sorted signature lists differ.

    ``k`` is the smallest power for which the sorted lists of row prefixes
    ``sig[.][1..k]`` differ; ``rank`` is the first position (in that sorted
    order) where they do. Both are 1-based, as in reports. ``reason`` is
    ``"signature"`` unless a cheap pre-check decided.
    """

    k: int
    rank: int
    reason: str = "signature"
    left: Optional[tuple] = None
    right: Optional[tuple] = None


@dataclass(frozen=True)
class NotIsomorphic:
    witness: Mismatch
    history: tuple = ()
    max_entries: tuple = ()


@dataclass(frozen=True)
class Stable:
    partition: MatchedPartition
    history: tuple = ()
    sig1: Optional[SignatureTable] = field(default=None, repr=False)
    sig2: Optional[SignatureTable] = field(default=None, repr=False)
    max_entries: tuple = ()

    @property
    def iterations(self) -> int:
        return len(self.history)


RefineOutcome = Union[NotIsomorphic, Stable]


def assign_diagonals(partition: MatchedPartition, n: int) -> tuple[DiagonalAssignment, DiagonalAssignment]:
    """Vertex in class x (1-based) gets 4n*x, in both graphs."""
    d1 = [0] * n
    d2 = [0] * n
    for x, (a, b) in enumerate(partition.classes, start=1):
        for v in a:
            d1[v] = 4 * n * x
        for v in b:
            d2[v] = 4 * n * x
    return DiagonalAssignment(tuple(d1)), DiagonalAssignment(tuple(d2))


def first_difference(rows1: list, rows2: list) -> Optional[Mismatch]:
    """Earliest (k, rank) at which the sorted row-prefix lists disagree."""
    if len(rows1) != len(rows2):
        return Mismatch(k=0, rank=0, reason="order")
    if sorted(rows1) == sorted(rows2):
        return None
    width = max((len(r) for r in rows1), default=0)
    for k in range(1, width + 1):
        s1 = sorted(r[:k] for r in rows1)
        s2 = sorted(r[:k] for r in rows2)
        if s1 != s2:
            rank = next(t for t, (a, b) in enumerate(zip(s1, s2)) if a != b)
            return Mismatch(k=k, rank=rank + 1, left=s1[rank], right=s2[rank])
    raise AssertionError("unreachable: full rows differ but no prefix does")


def split_classes(sig1: SignatureTable, sig2: SignatureTable) -> Union[MatchedPartition, Mismatch]:
    """Group equal rows into classes and pair the classes across both tables."""
    miss = first_difference(list(sig1.rows), list(sig2.rows))
    if miss is not None:
        return miss
    groups1: dict = {}
    groups2: dict = {}
    for v, row in enumerate(sig1.rows):
        groups1.setdefault(row, []).append(v)
    for v, row in enumerate(sig2.rows):
        groups2.setdefault(row, []).append(v)
    keys = sorted(groups1)
    return MatchedPartition(tuple((tuple(groups1[k]), tuple(groups2[k])) for k in keys), tuple(keys))


def degree_precheck(g: Graph, h: Graph) -> Optional[Mismatch]:
    """Decide cheap necessary conditions without matrix work.

    With the first-round diagonal 4n on every vertex, column 1 of the
    signature table is (4n)^2 + degree, so comparing degree sequences
    yields the same k = 1 witness the full computation would.
    """
    if g.n != h.n:
        return Mismatch(k=0, rank=0, reason="order")
    if g.m == h.m and sorted(g.degrees()) == sorted(h.degrees()):
        return None
    base = (4 * g.n) ** 2
    col1 = sorted((base + x,) for x in g.degrees())
    col2 = sorted((base + x,) for x in h.degrees())
    rank = next(t for t, (a, b) in enumerate(zip(col1, col2)) if a != b)
    reason = "edge-count" if g.m != h.m else "degree-sequence"
    return Mismatch(k=1, rank=rank + 1, reason=reason, left=col1[rank], right=col2[rank])


def refine_step(g: Graph, h: Graph, d1: DiagonalAssignment, d2: DiagonalAssignment):
    """Signature tables for both graphs under the given diagonals, then split."""
    sig1 = graph_signature(g, d1)
    sig2 = graph_signature(h, d2)
    return split_classes(sig1, sig2), sig1, sig2


def refine_fixpoint(g: Graph, h: Graph, precheck: bool = True) -> RefineOutcome:
    if g.n != h.n:
        return NotIsomorphic(Mismatch(k=0, rank=0, reason="order"))
    n = g.n
    if precheck:
        miss = degree_precheck(g, h)
        if miss is not None:
            return NotIsomorphic(miss)
    partition = MatchedPartition.single(n)
    if n == 0:
        return Stable(partition, (), SignatureTable(()), SignatureTable(()))
    c = partition.c
    history: list[int] = []
    biggest: list[int] = []
    while True:
        d1, d2 = assign_diagonals(partition, n)
        result, sig1, sig2 = refine_step(g, h, d1, d2)
        biggest.append(max(sig1.max_entry, sig2.max_entry))
        if isinstance(result, Mismatch):
            return NotIsomorphic(result, tuple(history), tuple(biggest))
        history.append(result.c)
        if result.c == c:
            return Stable(result, tuple(history), sig1, sig2, tuple(biggest))
        if result.c < c or len(history) > n:
            raise AssertionError(f"refinement not monotone: class counts {history}")
        partition, c = result, result.c
