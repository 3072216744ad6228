"""Differential runs of the spectral engine against the exact oracle.

Each pair is classified as

* ``Agree`` - engine and oracle concur (stable + verified map on isomorphic
  pairs, refutation on non-isomorphic ones);
* ``FalsePositive`` - refinement stable although the oracle proves the pair
  non-isomorphic;
* ``ConstructionFailure`` - the oracle finds an isomorphism, refinement is
  stable, but the construction does not return a verified map;
* ``SoundnessViolation`` - the engine refutes a pair the oracle proves
  isomorphic (would indicate a bug: relabeling cannot change signatures);
* ``OracleRefused`` - pair exceeds the oracle's size guard.

Findings are data; nothing here raises on a disagreement.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from typing import Iterable, Optional

from .construct import CandidateFailed, NotIsomorphicMap, VerifiedIsomorphism, construct_isomorphism
from .fixtures import fixture_pairs
from .formats import emit_graph6, parse_graph6
from .graph import (
    Graph,
    apply_permutation,
    generate_random_graph,
    generate_random_regular_graph,
    is_isomorphism,
    random_permutation,
)
from .oracle import OracleRefused, exact_isomorphism
from .refine import NotIsomorphic, Stable, refine_fixpoint
from .report import map_to_dict, refine_to_dict

CLASSES = ("Agree", "FalsePositive", "ConstructionFailure", "SoundnessViolation", "OracleRefused")


def gnp_pairs(sizes: Iterable[int], count: int, seed: int, probs=(0.2, 0.5, 0.8)) -> list:
    """Alternate relabeled copies (isomorphic) and independent draws (usually not)."""
    rng = random.Random(seed)
    out = []
    for n in sizes:
        for t in range(count):
            p = probs[t % len(probs)]
            g = generate_random_graph(n, p, rng.getrandbits(63))
            if t % 2 == 0:
                h = apply_permutation(g, random_permutation(n, rng.getrandbits(63)))
                kind = "relabeled"
            else:
                h = generate_random_graph(n, p, rng.getrandbits(63))
                kind = "independent"
            out.append((f"gnp-n{n}-p{p}-{t}-{kind}", g, h))
    return out


def regular_pairs(sizes: Iterable[int], count: int, seed: int, degree: int = 3) -> list:
    rng = random.Random(seed)
    out = []
    for n in sizes:
        for t in range(count):
            g = generate_random_regular_graph(n, degree, rng.getrandbits(63))
            if t % 2 == 0:
                h = apply_permutation(g, random_permutation(n, rng.getrandbits(63)))
                kind = "relabeled"
            else:
                h = generate_random_regular_graph(n, degree, rng.getrandbits(63))
                kind = "independent"
            out.append((f"regular{degree}-n{n}-{t}-{kind}", g, h))
    return out


def exhaustive_pairs(representatives: list, seed: int) -> list:
    """All unordered pairs {a, b} of same-order representatives; b is relabeled."""
    rng = random.Random(seed)
    by_n: dict = {}
    for idx, g in enumerate(representatives):
        by_n.setdefault(g.n, []).append((idx, g))
    out = []
    for n in sorted(by_n):
        for (ia, a), (ib, b) in combinations_with_replacement(by_n[n], 2):
            h = apply_permutation(b, random_permutation(n, rng.getrandbits(63)))
            out.append((f"small-n{n}-{ia}-{ib}", a, h))
    return out


def fixtures_family() -> list:
    return fixture_pairs()


def classify(label: str, g: Graph, h: Graph, oracle_limit: Optional[int] = 32,
             retry_j: bool = False, timing: bool = False) -> dict:
    t0 = time.perf_counter()
    try:
        witness = exact_isomorphism(g, h, limit=oracle_limit)
        oracle = "isomorphic" if witness is not None else "non-isomorphic"
    except OracleRefused:
        witness, oracle = None, "refused"
    t1 = time.perf_counter()
    refined = refine_fixpoint(g, h)
    t2 = time.perf_counter()
    mapped = construct_isomorphism(g, h, retry_j=retry_j) if isinstance(refined, Stable) else None
    t3 = time.perf_counter()

    if isinstance(mapped, VerifiedIsomorphism) and not is_isomorphism(g, h, mapped.p):
        raise AssertionError(f"{label}: verified map fails re-check")
    if oracle == "refused":
        verdict = "OracleRefused"
    elif oracle == "isomorphic":
        if isinstance(refined, NotIsomorphic) or isinstance(mapped, NotIsomorphicMap):
            verdict = "SoundnessViolation"
        elif isinstance(mapped, VerifiedIsomorphism):
            verdict = "Agree"
        else:
            verdict = "ConstructionFailure"
    else:
        if isinstance(mapped, VerifiedIsomorphism):
            raise AssertionError(f"{label}: verified map on an oracle-refuted pair")
        verdict = "FalsePositive" if isinstance(refined, Stable) else "Agree"

    row = {
        "label": label,
        "n": g.n,
        "left": emit_graph6(g),
        "right": emit_graph6(h),
        "oracle": oracle,
        "check": refine_to_dict(refined),
        "map": map_to_dict(mapped) if mapped is not None else None,
        "classification": verdict,
    }
    if witness is not None:
        row["oracle_permutation"] = witness.one_based()
    if timing:
        row["seconds"] = {"oracle": round(t1 - t0, 6), "check": round(t2 - t1, 6), "map": round(t3 - t2, 6)}
    return row


def _classify_packed(args) -> dict:
    label, left, right, limit, retry_j, timing = args
    return classify(label, parse_graph6(left), parse_graph6(right), limit, retry_j, timing)


def run_hunt(pairs: list, oracle_limit: Optional[int] = 32, retry_j: bool = False,
             jobs: int = 1, timing: bool = False) -> list[dict]:
    """Classify every pair; rows come back in input order whatever ``jobs`` is."""
    if jobs <= 1:
        return [classify(label, g, h, oracle_limit, retry_j, timing) for label, g, h in pairs]
    packed = [(label, emit_graph6(g), emit_graph6(h), oracle_limit, retry_j, timing) for label, g, h in pairs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_classify_packed, packed, chunksize=4))


def summarize(rows: list[dict]) -> dict:
    counts = {name: 0 for name in CLASSES}
    for row in rows:
        counts[row["classification"]] += 1
    return counts
