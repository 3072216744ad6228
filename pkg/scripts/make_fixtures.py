"""Regenerate the bundled .g6 fixtures.

Named graphs come from the constructors in spectral_iso.fixtures. The
small-graph list (one representative per isomorphism class, n <= 6) comes
from networkx's graph atlas, an independent source; tests re-check its
counts and pairwise non-isomorphism by brute force.
"""
from pathlib import Path

import networkx as nx

from spectral_iso.fixtures import write_fixtures
from spectral_iso.formats import emit_graph6
from spectral_iso.graph import Graph

OUT = Path(__file__).resolve().parents[1] / "src" / "spectral_iso" / "fixtures"


def small_graphs(max_n=6):
    out = []
    for a in nx.graph_atlas_g():
        if a.number_of_nodes() > max_n:
            break
        out.append(Graph.from_edges(a.number_of_nodes(), a.edges()))
    return out


if __name__ == "__main__":
    write_fixtures(OUT)
    lines = [emit_graph6(g) for g in small_graphs()]
    (OUT / "small_graphs.g6").write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} small graphs to {OUT}")
