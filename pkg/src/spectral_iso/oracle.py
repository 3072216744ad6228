"""Ground truth for differential testing: colour refinement and exact isomorphism.

Nothing here touches the signature/partition machinery under test; it only
depends on :mod:`spectral_iso.graph`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, Permutation, disjoint_union, is_isomorphism

DEFAULT_LIMIT = 32


class OracleRefused(RuntimeError):
    """Input exceeds the oracle's size guard."""

    def __init__(self, n: int, limit: int):
        super().__init__(f"exact oracle refuses n={n} (limit {limit})")
        self.n = n
        self.limit = limit


@dataclass(frozen=True)
class Coloring:
    """Stable colouring, colours numbered 0, 1, ... by first appearance."""

    color: tuple

    @property
    def num_colors(self) -> int:
        return len(set(self.color))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.color):
            out[c].append(v)
        return out


def _canonical(labels: Sequence) -> list[int]:
    seen: dict = {}
    return [seen.setdefault(lab, len(seen)) for lab in labels]


def _refine(g: Graph, colors: Sequence[int]) -> list[int]:
    """Iterate (own colour, sorted neighbour colours) until the class count stops growing.

    New colours are ranked by their label, so the numbering depends only on
    the colour structure and not on vertex names.
    """
    colors = list(colors)
    count = len(set(colors))
    while True:
        labels = [(colors[v], tuple(sorted(colors[u] for u in g.neighbors(v)))) for v in range(g.n)]
        rank = {lab: r for r, lab in enumerate(sorted(set(labels)))}
        new = [rank[lab] for lab in labels]
        new_count = len(rank)
        colors = new
        if new_count == count:
            return colors
        count = new_count


def color_refinement(g: Graph) -> Coloring:
    return Coloring(tuple(_canonical(_refine(g, [0] * g.n))))


def _balanced(colors: Sequence[int], n: int) -> bool:
    left: dict = {}
    for c in colors[:n]:
        left[c] = left.get(c, 0) + 1
    right: dict = {}
    for c in colors[n:]:
        right[c] = right.get(c, 0) + 1
    return left == right


def exact_isomorphism(g: Graph, h: Graph, limit: Optional[int] = DEFAULT_LIMIT) -> Optional[Permutation]:
    """Return an isomorphism g -> h, or None if there is none.

    Search by individualization-refinement on the disjoint union: refine
    jointly, branch on the smallest non-singleton colour class (lowest g
    vertex, h candidates in ascending order), prune branches whose colour
    counts differ between the two halves. Every returned map is verified.
    """
    if g.n != h.n:
        return None
    n = g.n
    if limit is not None and n > limit:
        raise OracleRefused(n, limit)
    if g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    union = disjoint_union(g, h)
    start = _refine(union, [0] * (2 * n))
    if not _balanced(start, n):
        return None
    return _search(g, h, union, start)


def _search(g: Graph, h: Graph, union: Graph, colors: list[int]) -> Optional[Permutation]:
    n = g.n
    members: dict = {}
    for v in range(n):
        members.setdefault(colors[v], []).append(v)
    open_classes = [(len(vs), c) for c, vs in members.items() if len(vs) > 1]
    if not open_classes:
        where = {colors[n + w]: w for w in range(n)}
        p = Permutation(tuple(where[colors[v]] for v in range(n)))
        return p if is_isomorphism(g, h, p) else None
    _, target = min(open_classes)
    u = members[target][0]
    fresh = max(colors) + 1
    for w in range(n):
        if colors[n + w] != target:
            continue
        trial = list(colors)
        trial[u] = trial[n + w] = fresh
        refined = _refine(union, trial)
        if not _balanced(refined, n):
            continue
        found = _search(g, h, union, refined)
        if found is not None:
            return found
    return None


def brute_force_isomorphism(g: Graph, h: Graph) -> Optional[Permutation]:
    """Try all n! maps; the validation baseline for :func:`exact_isomorphism`."""
    from itertools import permutations

    if g.n != h.n or g.m != h.m:
        return None
    for img in permutations(range(g.n)):
        p = Permutation(img)
        if is_isomorphism(g, h, p):
            return p
    return None
