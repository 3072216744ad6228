"""Exact nonnegative integer matrices and per-vertex signature tables.

Everything here runs on Python ints, which are unbounded; entries of B^n
grow to roughly n * log2(4n^2) bits, so no fixed-width type is ever used
on the power/signature path.
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import itemgetter
from typing import Iterator, Sequence

from .graph import Graph


class IntMatrix:
    """Square matrix of exact nonnegative integers, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has length {len(r)}, expected {n}")
            if any(x < 0 for x in r):
                raise ValueError(f"negative entry in row {i}")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(r) for r in self.rows]!r})"

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(r[i] for i, r in enumerate(self.rows))

    def trace(self) -> int:
        return sum(self.diagonal())

    def max_entry(self) -> int:
        return max((max(r) for r in self.rows), default=0)

    def is_symmetric(self) -> bool:
        rows = self.rows
        return all(rows[i][j] == rows[j][i] for i in range(len(rows)) for j in range(i))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def identity(cls, n: int):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])


class BigSymMatrix(IntMatrix):
    """Symmetric :class:`IntMatrix`; symmetry is checked on construction."""

    __slots__ = ()

    def __init__(self, rows: Sequence[Sequence[int]]):
        super().__init__(rows)
        if not self.is_symmetric():
            raise ValueError("matrix is not symmetric")


@dataclass(frozen=True)
class DiagonalAssignment:
    """Diagonal perturbation d_1..d_n used to build B = D + A.

    Valid assignments keep every d_i above n - 1 (so each Gerschgorin
    interval of B lies strictly right of zero) and keep distinct values at
    least 4n apart.
    """

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def violations(self) -> list[str]:
        n = self.n
        problems = [f"d[{i}]={d} <= n-1={n - 1}" for i, d in enumerate(self.values) if d <= n - 1]
        distinct = sorted(set(self.values))
        for a, b in zip(distinct, distinct[1:]):
            if b - a < 4 * n:
                problems.append(f"distinct diagonals {a} and {b} closer than 4n={4 * n}")
        return problems

    def validate(self) -> None:
        problems = self.violations()
        if problems:
            raise ValueError("invalid diagonal assignment: " + "; ".join(problems))

    def permuted(self, p) -> "DiagonalAssignment":
        """Diagonal carried along a relabeling: vertex p(i) receives d_i."""
        out = [0] * self.n
        for i, d in enumerate(self.values):
            out[p(i)] = d
        return DiagonalAssignment(tuple(out))


def embed_with_diagonal(g: Graph, d: DiagonalAssignment) -> BigSymMatrix:
    """B = D + A for graph ``g``."""
    if d.n != g.n:
        raise ValueError(f"diagonal has {d.n} entries, graph has {g.n} vertices")
    d.validate()
    rows = g.adjacency_matrix()
    for i in range(g.n):
        rows[i][i] = d[i]
    return BigSymMatrix(rows)


def _product_rows(a_rows, b_rows) -> list[tuple[int, ...]]:
    cols = list(zip(*b_rows))
    return [tuple(sum(map(int.__mul__, r, c)) for c in cols) for r in a_rows]


def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product; returns a :class:`BigSymMatrix` when the product is symmetric."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    prod = IntMatrix(_product_rows(a.rows, b.rows))
    if prod.is_symmetric():
        return BigSymMatrix(prod.rows)
    return prod


def _sparse_columns(b: IntMatrix):
    """Per column j: (diagonal, off-diagonal row indices, their values or None when all are 1)."""
    out = []
    for j in range(b.n):
        idx = [l for l in range(b.n) if l != j and b.rows[l][j]]
        vals = [b.rows[l][j] for l in idx]
        out.append((b.rows[j][j], idx, None if all(v == 1 for v in vals) else vals))
    return out


def _times(rows, cols) -> list[tuple[int, ...]]:
    """rows · B where B is given by :func:`_sparse_columns`."""
    out = []
    for r in rows:
        new = []
        for j, (dj, idx, vals) in enumerate(cols):
            acc = r[j] * dj
            if vals is None:
                if len(idx) == 1:
                    acc += r[idx[0]]
                elif idx:
                    acc += sum(itemgetter(*idx)(r))
            else:
                acc += sum(r[l] * v for l, v in zip(idx, vals))
            new.append(acc)
        out.append(tuple(new))
    return out


def iter_powers(b: BigSymMatrix, kmax: int | None = None) -> Iterator[BigSymMatrix]:
    """Yield B, B^2, ..., B^kmax (default kmax = n) by B^{k+1} = B^k · B.

    Only the running power is held; zero entries of B are skipped.
    """
    if not isinstance(b, BigSymMatrix):
        b = BigSymMatrix(b.rows)
    kmax = b.n if kmax is None else kmax
    cols = _sparse_columns(b)
    rows = b.rows
    for k in range(1, kmax + 1):
        if k > 1:
            rows = _times(rows, cols)
        yield _trusted_sym(rows)


def _trusted_sym(rows) -> BigSymMatrix:
    # powers of a symmetric matrix are symmetric; skip the O(n^2) recheck here
    m = BigSymMatrix.__new__(BigSymMatrix)
    m.rows = tuple(rows)
    return m


@dataclass(frozen=True)
class SignatureTable:
    """rows[i][k-1] = squared Euclidean norm of column i of B^k, k = 1..n.

    ``max_entry`` is the largest entry seen in any power B^1..B^n while
    the table was built.
    """

    rows: tuple
    max_entry: int = 0

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def sorted_rows(self) -> list[tuple[int, ...]]:
        return sorted(self.rows)


def signature_table(b: BigSymMatrix) -> SignatureTable:
    n = b.n
    cols: list[list[int]] = [[] for _ in range(n)]
    biggest = 0
    for power in iter_powers(b):
        # B^k is symmetric, so column i equals row i
        for i, r in enumerate(power.rows):
            cols[i].append(sum(x * x for x in r))
            top = max(r)
            if top > biggest:
                biggest = top
    return SignatureTable(tuple(tuple(c) for c in cols), biggest)


def graph_signature(g: Graph, d: DiagonalAssignment) -> SignatureTable:
    return signature_table(embed_with_diagonal(g, d))
