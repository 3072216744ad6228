"""Graph and permutation values, relabeling, and isomorphism verification.

Vertices are 0-indexed in the Python API. File formats, the CLI and JSON
reports use 1-indexed vertices; the conversion happens at those boundaries
(see :mod:`spectral_iso.formats` and :mod:`spectral_iso.cli`).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds each edge once as a pair ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset
    _nbrs: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        nbrs = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge {e!r} for a graph on {self.n} vertices")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "_nbrs", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build from 0-indexed pairs; duplicates collapse, self-loops raise."""
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            es.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(es))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for v in range(n) for u in range(v)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a simple cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._nbrs[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._nbrs]

    def adjacency_matrix(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        return a

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1``; vertex ``i`` is sent to ``image[i]``."""

    image: tuple

    def __post_init__(self):
        img = tuple(self.image)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 0..{len(img) - 1}: {img!r}")
        object.__setattr__(self, "image", img)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(int(x) - 1 for x in images))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.image)

    def one_based(self) -> list[int]:
        return [x + 1 for x in self.image]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))


def compose(q: Permutation, p: Permutation) -> Permutation:
    """``q ∘ p``: apply ``p`` first, then ``q``."""
    if q.n != p.n:
        raise ValueError(f"cannot compose permutations of sizes {q.n} and {p.n}")
    return Permutation(tuple(q.image[x] for x in p.image))


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p.image):
        inv[x] = i
    return Permutation(tuple(inv))


def transposition(n: int, a: int, b: int) -> Permutation:
    img = list(range(n))
    img[a], img[b] = img[b], img[a]
    return Permutation(tuple(img))


def apply_permutation(g: Graph, p: Permutation) -> Graph:
    """Relabel ``g``: the result has edge ``{p(u), p(v)}`` iff ``g`` has ``{u, v}``."""
    if g.n != p.n:
        raise ValueError(f"permutation size {p.n} does not match graph order {g.n}")
    img = p.image
    return Graph.from_edges(g.n, ((img[u], img[v]) for u, v in g.edges))


def first_violation(g: Graph, h: Graph, p: Permutation) -> Optional[tuple[int, int]]:
    """First vertex pair ``(u, v)``, ``u < v``, whose adjacency ``p`` fails to preserve."""
    if not (g.n == h.n == p.n):
        raise ValueError(f"size mismatch: g.n={g.n}, h.n={h.n}, p.n={p.n}")
    img = p.image
    for u in range(g.n):
        nu = g.neighbors(u)
        hu = h.neighbors(img[u])
        for v in range(u + 1, g.n):
            if (v in nu) != (img[v] in hu):
                return (u, v)
    return None


def is_isomorphism(g: Graph, h: Graph, p: Permutation) -> bool:
    """True iff ``p`` maps ``g`` onto ``h`` edge for edge."""
    if not (g.n == h.n == p.n):
        raise ValueError(f"size mismatch: g.n={g.n}, h.n={h.n}, p.n={p.n}")
    if g.m != h.m:
        return False
    img = p.image
    return all(h.adjacent(img[u], img[v]) for u, v in g.edges)


def generate_random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair ``u < v`` is an edge independently with probability ``p``.

    Pairs are drawn in lexicographic order from ``random.Random(seed)``, so the
    result is a deterministic function of ``(n, p, seed)``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, frozenset(edges))


def random_permutation(n: int, seed: int) -> Permutation:
    img = list(range(n))
    random.Random(seed).shuffle(img)
    return Permutation(tuple(img))


def generate_random_regular_graph(n: int, d: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Random ``d``-regular graph by the pairing model with rejection."""
    if d >= n or d < 0 or (n * d) % 2:
        raise ValueError(f"no simple {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        points = [v for v in range(n) for _ in range(d)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            e = (a, b) if a < b else (b, a)
            if a == b or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(n, frozenset(edges))
    raise RuntimeError(f"pairing model failed {max_tries} times for n={n}, d={d}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.edges | frozenset((u + g.n, v + g.n) for u, v in h.edges))
