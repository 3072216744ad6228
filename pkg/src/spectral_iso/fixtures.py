"""Named graphs and the bundled fixture pairs used by ``hunt --family fixtures``."""
from __future__ import annotations

from importlib import resources

from .formats import emit_graph6, parse_graph6
from .graph import Graph, apply_permutation, random_permutation

# (pair name, left fixture, right fixture)
PAIRS = [
    ("srg16-shrikhande-vs-rook", "shrikhande", "rook4x4"),
    ("srg16-shrikhande-vs-relabeled", "shrikhande", "shrikhande_relabeled"),
    ("cospectral-c4k1-vs-star", "c4_plus_k1", "star_k1_4"),
    ("c6-vs-two-triangles", "c6", "two_c3"),
    ("petersen-vs-relabeled", "petersen", "petersen_relabeled"),
    ("cospectral-cayley-z2xz8", "cayley_z2z8_a", "cayley_z2z8_b"),
]

# Connection sets on Z2 x Z8 giving cospectral, vertex-transitive, non-isomorphic graphs
Z2Z8_A = [(0, 1), (0, 7), (0, 2), (0, 6), (1, 1), (1, 7)]
Z2Z8_B = [(0, 1), (0, 7), (0, 4), (1, 0), (1, 1), (1, 7)]


def shrikhande() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1)."""
    steps = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for a in range(4):
        for b in range(4):
            for da, db in steps:
                u, v = 4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4
                edges.add((min(u, v), max(u, v)))
    return Graph(16, frozenset(edges))


def rook(k: int = 4) -> Graph:
    """K_k x K_k: squares of a k x k board, adjacent when in the same row or column."""
    edges = []
    for u in range(k * k):
        for v in range(u + 1, k * k):
            if u // k == v // k or u % k == v % k:
                edges.append((u, v))
    return Graph(k * k, frozenset(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cayley_z2_z8(connection) -> Graph:
    """Cayley graph of Z2 x Z8; vertex (a, b) is numbered 8a + b."""
    edges = set()
    for a in range(2):
        for b in range(8):
            for da, db in connection:
                u, v = 8 * a + b, 8 * ((a + da) % 2) + (b + db) % 8
                edges.add((min(u, v), max(u, v)))
    return Graph(16, frozenset(edges))


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def builders() -> dict:
    """Fixture name -> graph, as frozen into the bundled ``.g6`` files."""
    return {
        "shrikhande": shrikhande(),
        "rook4x4": rook(4),
        "shrikhande_relabeled": apply_permutation(shrikhande(), random_permutation(16, 2024)),
        "c4_plus_k1": Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        "star_k1_4": star(4),
        "c6": Graph.cycle(6),
        "two_c3": Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]),
        "petersen": petersen(),
        "petersen_relabeled": apply_permutation(petersen(), random_permutation(10, 7)),
        "cayley_z2z8_a": cayley_z2_z8(Z2Z8_A),
        "cayley_z2z8_b": cayley_z2_z8(Z2Z8_B),
    }


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("fixtures", f"{name}.g6").read_text(encoding="ascii")


def load_fixture(name: str) -> Graph:
    return parse_graph6(fixture_text(name).strip())


def fixture_pairs() -> list[tuple[str, Graph, Graph]]:
    return [(label, load_fixture(a), load_fixture(b)) for label, a, b in PAIRS]


def write_fixtures(directory) -> None:
    from pathlib import Path

    directory = Path(directory)
    for name, g in builders().items():
        (directory / f"{name}.g6").write_text(emit_graph6(g) + "\n", encoding="ascii")
