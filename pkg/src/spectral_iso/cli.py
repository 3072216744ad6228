"""``spectral-iso`` command line.

Exit codes: 0 isomorphic / verified / completed, 1 not isomorphic,
2 construction failed verification, 3 usage or input error, 4 oracle
guard refusal.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__
from .construct import CandidateFailed, NotIsomorphicMap, VerifiedIsomorphism, construct_isomorphism
from .formats import FormatError, read_graph, read_graph6_lines
from .graph import (
    Permutation,
    apply_permutation,
    first_violation,
    generate_random_graph,
    is_isomorphism,
    random_permutation,
)
from .hunt import exhaustive_pairs, fixtures_family, gnp_pairs, regular_pairs, run_hunt, summarize
from .refine import NotIsomorphic, refine_fixpoint
from .report import SCHEMA_VERSION, bits, dumps, graph_digest, map_to_dict, refine_to_dict

EXIT_OK, EXIT_NOT_ISO, EXIT_CANDIDATE_FAILED, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectral-iso", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report on stdout")
        p.add_argument("--timing", action="store_true", help="include wall-clock timings (breaks byte stability)")

    p = sub.add_parser("check", help="run the signature refinement test")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--signatures", action="store_true", help="include the final signature tables")
    common(p)

    p = sub.add_parser("map", help="construct and verify an isomorphism")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--retry-j", action="store_true", help="on failure, try other partners in the class (beyond the plain procedure)")
    common(p)

    p = sub.add_parser("verify", help="check a supplied permutation (1-indexed images)")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("p")
    common(p)

    p = sub.add_parser("hunt", help="differential runs against the exact oracle")
    p.add_argument("--family", required=True, choices=["gnp", "regular", "fixtures", "exhaustive"])
    p.add_argument("--sizes", type=_int_list, default=[8, 12, 16])
    p.add_argument("--count", type=int, default=10, help="pairs per size")
    p.add_argument("--seed", type=int)
    p.add_argument("--p", dest="probs", type=_float_list, default=[0.2, 0.5, 0.8], help="edge probabilities (gnp)")
    p.add_argument("--degree", type=int, default=3, help="vertex degree (regular)")
    p.add_argument("--max-n", type=int, default=6, help="largest order for the exhaustive family")
    p.add_argument("--oracle-limit", type=int, default=32)
    p.add_argument("--retry-j", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    common(p)

    p = sub.add_parser("bench", help="timing and entry-size table on relabeled random pairs")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--p", dest="prob", type=float, default=0.5)
    p.add_argument("--json", action="store_true")
    return parser


def _load(path: str):
    try:
        return read_graph(path)
    except (OSError, FormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_permutation(path: str, n: int) -> Permutation:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise UsageError(f"{path}: {exc}") from None
    tokens = text.replace(",", " ").split()
    try:
        p = Permutation.from_one_based(int(t) for t in tokens)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if p.n != n:
        raise UsageError(f"{path}: permutation has {p.n} images, graphs have {n} vertices")
    return p


def _emit(args, report: dict, summary: str) -> None:
    if args.json:
        sys.stdout.write(dumps(report))
    else:
        print(summary)


def cmd_check(args) -> int:
    g, h = _load(args.g), _load(args.h)
    t0 = time.perf_counter()
    outcome = refine_fixpoint(g, h)
    report = {"schema": SCHEMA_VERSION, "command": "check",
              "inputs": [graph_digest(g, args.g), graph_digest(h, args.h)]}
    report.update(refine_to_dict(outcome, signatures=args.signatures))
    if args.timing:
        report["seconds"] = round(time.perf_counter() - t0, 6)
    if isinstance(outcome, NotIsomorphic):
        w = outcome.witness
        _emit(args, report, f"not isomorphic: signatures differ ({w.reason}) at k={w.k}, rank {w.rank}")
        return EXIT_NOT_ISO
    _emit(args, report, f"not distinguished: stable after {outcome.iterations} iteration(s), "
                        f"{outcome.partition.c} class(es)")
    return EXIT_OK


def cmd_map(args) -> int:
    g, h = _load(args.g), _load(args.h)
    t0 = time.perf_counter()
    outcome = construct_isomorphism(g, h, retry_j=args.retry_j)
    report = {"schema": SCHEMA_VERSION, "command": "map", "retry_j": args.retry_j,
              "inputs": [graph_digest(g, args.g), graph_digest(h, args.h)]}
    report.update(map_to_dict(outcome))
    if args.timing:
        report["seconds"] = round(time.perf_counter() - t0, 6)
    if isinstance(outcome, VerifiedIsomorphism):
        _emit(args, report, "verified isomorphism: " + " ".join(map(str, outcome.p.one_based())))
        return EXIT_OK
    if isinstance(outcome, NotIsomorphicMap):
        w = outcome.witness
        _emit(args, report, f"not isomorphic: signatures differ ({w.reason}) at k={w.k}, rank {w.rank}")
        return EXIT_NOT_ISO
    assert isinstance(outcome, CandidateFailed)
    if outcome.p is not None:
        u, v = outcome.violation
        detail = f"candidate map breaks vertex pair ({u + 1}, {v + 1})"
    else:
        detail = f"signatures diverged after individualization at k={outcome.mismatch.k}"
    _emit(args, report, f"candidate failed: {detail}")
    return EXIT_CANDIDATE_FAILED


def cmd_verify(args) -> int:
    g, h = _load(args.g), _load(args.h)
    if g.n != h.n:
        raise UsageError(f"graphs differ in order ({g.n} vs {h.n})")
    p = _load_permutation(args.p, g.n)
    ok = is_isomorphism(g, h, p)
    report = {"schema": SCHEMA_VERSION, "command": "verify",
              "inputs": [graph_digest(g, args.g), graph_digest(h, args.h)],
              "permutation": p.one_based(), "outcome": "valid" if ok else "invalid"}
    if not ok:
        u, v = first_violation(g, h, p)
        report["violation"] = [u + 1, v + 1]
        _emit(args, report, f"invalid: vertex pair ({u + 1}, {v + 1}) not preserved")
        return EXIT_NOT_ISO
    _emit(args, report, "valid isomorphism")
    return EXIT_OK


def _hunt_pairs(args) -> list:
    if args.family in ("gnp", "regular") and args.seed is None:
        raise UsageError(f"--seed is required for the {args.family} family")
    if args.family == "gnp":
        return gnp_pairs(args.sizes, args.count, args.seed, tuple(args.probs))
    if args.family == "regular":
        try:
            return regular_pairs(args.sizes, args.count, args.seed, args.degree)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.family == "fixtures":
        return fixtures_family()
    from importlib import resources

    text = resources.files(__package__).joinpath("fixtures", "small_graphs.g6").read_text(encoding="ascii")
    reps = [g for g in read_graph6_lines(text) if g.n <= args.max_n]
    return exhaustive_pairs(reps, 0 if args.seed is None else args.seed)


def cmd_hunt(args) -> int:
    pairs = _hunt_pairs(args)
    rows = run_hunt(pairs, args.oracle_limit, args.retry_j, args.jobs, args.timing)
    counts = summarize(rows)
    report = {"schema": SCHEMA_VERSION, "command": "hunt", "family": args.family, "seed": args.seed,
              "retry_j": args.retry_j, "oracle_limit": args.oracle_limit, "pairs": rows, "summary": counts}
    lines = [f"{r['label']:<40} n={r['n']:<3} oracle={r['oracle']:<15} {r['classification']}" for r in rows]
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    _emit(args, report, "\n".join(lines))
    return EXIT_REFUSED if counts["OracleRefused"] else EXIT_OK


def cmd_bench(args) -> int:
    if args.seed is None:
        raise UsageError("--seed is required for bench")
    rows = []
    for n in args.sizes:
        g = generate_random_graph(n, args.prob, args.seed + n)
        h = apply_permutation(g, random_permutation(n, args.seed + 7 * n + 1))
        t0 = time.perf_counter()
        checked = refine_fixpoint(g, h)
        t1 = time.perf_counter()
        mapped = construct_isomorphism(g, h)
        t2 = time.perf_counter()
        entries = getattr(mapped, "max_entries", ()) or checked.max_entries
        rows.append({
            "n": n,
            "check": type(checked).__name__,
            "map": type(mapped).__name__,
            "check_seconds": round(t1 - t0, 4),
            "map_seconds": round(t2 - t1, 4),
            "refine_iterations": len(checked.history),
            "rounds": len(getattr(mapped, "trace", ())),
            "max_entry_bits": max(bits(entries), default=0),
            "naive_bound_bits": ((2 * n * n + 2 * n) ** n).bit_length(),
            "gerschgorin_bound_bits": ((4 * n * n + n - 1) ** n).bit_length(),
        })
    report = {"schema": SCHEMA_VERSION, "command": "bench", "seed": args.seed, "p": args.prob, "rows": rows}
    head = f"{'n':>4} {'check s':>9} {'map s':>9} {'iters':>5} {'rounds':>6} {'bits':>6} {'naive':>6} {'gersch':>6}"
    lines = [head] + [
        f"{r['n']:>4} {r['check_seconds']:>9.3f} {r['map_seconds']:>9.3f} {r['refine_iterations']:>5} "
        f"{r['rounds']:>6} {r['max_entry_bits']:>6} {r['naive_bound_bits']:>6} {r['gerschgorin_bound_bits']:>6}"
        for r in rows
    ]
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


COMMANDS = {"check": cmd_check, "map": cmd_map, "verify": cmd_verify, "hunt": cmd_hunt, "bench": cmd_bench}


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"spectral-iso: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
