"""JSON-ready dictionaries for outcomes. Big integers become decimal strings; vertices are 1-based."""
from __future__ import annotations

import hashlib
import json

from .bigmat import SignatureTable
from .construct import CandidateFailed, Choice, NotIsomorphicMap, VerifiedIsomorphism
from .formats import emit_graph6
from .graph import Graph
from .refine import MatchedPartition, Mismatch, NotIsomorphic, Stable

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def graph_digest(g: Graph, path=None) -> dict:
    g6 = emit_graph6(g)
    out = {"n": g.n, "m": g.m, "graph6": g6, "sha256": hashlib.sha256(g6.encode("ascii")).hexdigest()}
    if path is not None:
        out["path"] = str(path)
    return out


def bits(values) -> list[int]:
    return [int(v).bit_length() for v in values]


def signatures_to_json(sig: SignatureTable) -> list[list[str]]:
    return [[str(x) for x in row] for row in sig.rows]


def partition_to_json(partition: MatchedPartition) -> list[dict]:
    out = []
    for (a, b), key in zip(partition.classes, partition.keys):
        entry = {"left": [v + 1 for v in a], "right": [v + 1 for v in b]}
        if key is not None:
            entry["signature"] = [str(x) for x in key]
        out.append(entry)
    return out


def mismatch_to_json(m: Mismatch) -> dict:
    out = {"reason": m.reason, "k": m.k, "rank": m.rank}
    if m.left is not None:
        out["left"] = [str(x) for x in m.left]
        out["right"] = [str(x) for x in m.right]
    return out


def choice_to_json(ch: Choice) -> dict:
    return {"class": ch.x + 1, "i": ch.i + 1, "j": ch.j + 1, "c": ch.c, "value": ch.value}


def refine_to_dict(outcome, signatures: bool = False) -> dict:
    if isinstance(outcome, NotIsomorphic):
        return {
            "outcome": "NotIsomorphic",
            "witness": mismatch_to_json(outcome.witness),
            "class_counts": list(outcome.history),
            "max_entry_bits": bits(outcome.max_entries),
        }
    assert isinstance(outcome, Stable)
    out = {
        "outcome": "Stable",
        "class_counts": list(outcome.history),
        "iterations": outcome.iterations,
        "classes": partition_to_json(outcome.partition),
        "max_entry_bits": bits(outcome.max_entries),
    }
    if signatures:
        out["signatures"] = {"left": signatures_to_json(outcome.sig1), "right": signatures_to_json(outcome.sig2)}
    return out


def map_to_dict(outcome) -> dict:
    if isinstance(outcome, VerifiedIsomorphism):
        return {
            "outcome": "VerifiedIsomorphism",
            "permutation": outcome.p.one_based(),
            "trace": [choice_to_json(c) for c in outcome.trace],
            "rounds": len(outcome.trace),
            "class_counts": list(outcome.refine_history),
            "max_entry_bits": bits(outcome.max_entries),
        }
    if isinstance(outcome, NotIsomorphicMap):
        out = {
            "outcome": "NotIsomorphic",
            "witness": mismatch_to_json(outcome.witness),
            "class_counts": list(outcome.refine_history),
        }
        if outcome.exhausted is not None:
            out["exhausted"] = choice_to_json(outcome.exhausted)
        return out
    assert isinstance(outcome, CandidateFailed)
    return {
        "outcome": "CandidateFailed",
        "permutation": outcome.p.one_based() if outcome.p is not None else None,
        "violation": [v + 1 for v in outcome.violation] if outcome.violation else None,
        "mismatch": mismatch_to_json(outcome.mismatch) if outcome.mismatch else None,
        "trace": [choice_to_json(c) for c in outcome.trace],
        "rounds": len(outcome.trace),
        "class_counts": list(outcome.refine_history),
        "max_entry_bits": bits(outcome.max_entries),
    }
