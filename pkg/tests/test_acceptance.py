"""Acceptance criteria, one test each; every test logs a PASS/FAIL line to the terminal summary."""

import random
import time
from importlib import resources

import pytest

from spectral_iso import bigmat
from spectral_iso.bigmat import DiagonalAssignment, embed_with_diagonal, graph_signature, multiply
from spectral_iso.cli import run_cli
from spectral_iso.construct import VerifiedIsomorphism, construct_isomorphism
from spectral_iso.formats import emit_graph6, read_graph6_lines
from spectral_iso.graph import (
    apply_permutation,
    generate_random_graph,
    is_isomorphism,
    random_permutation,
)
from spectral_iso.hunt import exhaustive_pairs, fixtures_family, run_hunt, summarize
from spectral_iso.refine import NotIsomorphic, Stable, refine_fixpoint

from conftest import P3

PROBS = (0.2, 0.5, 0.8)


def record(log, number, ok, detail):
    log.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def relabelled_pairs(count=200, seed=20240601):
    rng = random.Random(seed)
    pairs = []
    for t in range(count):
        n = 2 + t % 39
        p = PROBS[t % 3]
        g = generate_random_graph(n, p, rng.getrandbits(32))
        h = apply_permutation(g, random_permutation(n, rng.getrandbits(32)))
        pairs.append((f"rand-{t}-n{n}-p{p}", g, h))
    return pairs


@pytest.fixture(scope="module")
def random_corpus():
    rows = []
    for label, g, h in relabelled_pairs():
        rows.append((label, g, h, refine_fixpoint(g, h), construct_isomorphism(g, h)))
    return rows


@pytest.fixture(scope="module")
def small_reps():
    text = resources.files("spectral_iso").joinpath("fixtures", "small_graphs.g6").read_text()
    return read_graph6_lines(text)


@pytest.fixture(scope="module")
def exhaustive_rows(small_reps):
    return run_hunt(exhaustive_pairs(small_reps, seed=6), jobs=4)


def test_criterion_1_relabelled_pairs(random_corpus, acceptance_log):
    stable = sum(isinstance(r[3], Stable) for r in random_corpus)
    verified = sum(isinstance(r[4], VerifiedIsomorphism) for r in random_corpus)
    ok = stable == verified == len(random_corpus) == 200
    record(acceptance_log, 1, ok, f"check isomorphic {stable}/200, map verified {verified}/200")
    assert ok


def test_criterion_2_verification_gate(random_corpus, exhaustive_rows, tmp_path, acceptance_log, capsys):
    checked = failures = 0
    for idx, (label, g, h, _, mapped) in enumerate(random_corpus):
        if not isinstance(mapped, VerifiedIsomorphism):
            continue
        left, right, perm = (tmp_path / f"{idx}-{s}" for s in ("g.g6", "h.g6", "p.txt"))
        left.write_text(emit_graph6(g) + "\n")
        right.write_text(emit_graph6(h) + "\n")
        perm.write_text(" ".join(map(str, mapped.p.one_based())) + "\n")
        in_api = is_isomorphism(g, h, mapped.p)
        via_cli = run_cli(["verify", str(left), str(right), str(perm)]) == 0
        failures += not (in_api and via_cli)
        checked += 1
    # hunt rows carry verified maps as 1-indexed images; re-check a slice through the CLI too
    for idx, row in enumerate(r for r in exhaustive_rows if r["map"] and r["map"]["outcome"] == "VerifiedIsomorphism"):
        if idx % 25:
            continue
        left, right, perm = (tmp_path / f"x{idx}-{s}" for s in ("g.g6", "h.g6", "p.txt"))
        left.write_text(row["left"] + "\n")
        right.write_text(row["right"] + "\n")
        perm.write_text(" ".join(map(str, row["map"]["permutation"])) + "\n")
        failures += run_cli(["verify", str(left), str(right), str(perm)]) != 0
        checked += 1
    capsys.readouterr()
    ok = failures == 0 and checked > 200
    record(acceptance_log, 2, ok, f"{checked} verified maps re-checked by API and `verify`, {failures} failures")
    assert ok


def test_criterion_3_exhaustive_oracle_differential(exhaustive_rows, acceptance_log):
    iso_rows = [r for r in exhaustive_rows if r["oracle"] == "isomorphic"]
    violations = [r["label"] for r in iso_rows if r["check"]["outcome"] != "Stable"]
    counts = summarize(exhaustive_rows)
    fixtures = {r["label"]: r for r in run_hunt(fixtures_family())}
    srg = fixtures["srg16-shrikhande-vs-rook"]
    definitive = srg["oracle"] != "refused" and srg["classification"] in ("Agree", "FalsePositive")
    ok = not violations and counts["SoundnessViolation"] == 0 and definitive and len(exhaustive_rows) == 12922
    record(acceptance_log, 3,
           ok, f"{len(exhaustive_rows)} pairs (n<=6), {len(violations)} soundness violations, "
               f"{counts['FalsePositive']} false positives; SRG(16,6,2,2) pair -> {srg['classification']}")
    assert ok


class _PowerRecorder:
    """Wraps iter_powers and keeps the largest entry of every power handed out."""

    def __init__(self, inner):
        self.inner = inner
        self.largest = 0
        self.powers = 0

    def __call__(self, b, kmax=None):
        for power in self.inner(b, kmax):
            self.powers += 1
            self.largest = max(self.largest, max(max(r) for r in power.rows))
            yield power


def test_criterion_4_entry_bound(acceptance_log, monkeypatch):
    recorder = _PowerRecorder(bigmat.iter_powers)
    monkeypatch.setattr(bigmat, "iter_powers", recorder)
    worst = []
    for n in (4, 8, 12, 16, 20):
        bound = (2 * n * n + 2 * n) ** n
        for s, p in enumerate(PROBS):
            g = generate_random_graph(n, p, 1000 * n + s)
            h = apply_permutation(g, random_permutation(n, 77 * n + s))
            recorder.largest = 0
            out = construct_isomorphism(g, h)
            engine = max(out.max_entries)
            assert engine == recorder.largest
            worst.append((n, p, engine.bit_length() - bound.bit_length(), engine <= bound))
    bad = [w for w in worst if not w[3]]
    ok = not bad
    detail = (f"{len(worst) - len(bad)}/{len(worst)} instances within (2n^2+2n)^n"
              + ("" if ok else "; over by bits " + ", ".join(f"n={n},p={p}:+{d}" for n, p, d, _ in bad)))
    record(acceptance_log, 4, ok, detail)
    assert ok, detail


def _monotone(history):
    # c strictly increases on every iteration except the confirming one
    return all(a < b for a, b in zip(history[:-1], history[1:-1])) and (
        len(history) < 2 or history[-1] == history[-2])


def test_criterion_5_iteration_bounds(random_corpus, exhaustive_rows, acceptance_log):
    problems = []
    corpus = [(label, g, h, out, mapped) for label, g, h, out, mapped in random_corpus]
    for label, g, h in fixtures_family():
        corpus.append((label, g, h, refine_fixpoint(g, h), construct_isomorphism(g, h)))
    for label, g, h, out, mapped in corpus:
        history = out.history
        rounds = len(getattr(mapped, "trace", ()))
        if len(history) > g.n or rounds > g.n:
            problems.append(label)
        if isinstance(out, Stable) and not _monotone(list(history)):
            problems.append(label)
        if isinstance(out, NotIsomorphic) and any(a >= b for a, b in zip(history, history[1:])):
            problems.append(label)
    for row in exhaustive_rows:
        hist = row["check"]["class_counts"]
        rounds = len(row["map"]["trace"]) if row["map"] else 0
        if len(hist) > row["n"] or rounds > row["n"]:
            problems.append(row["label"])
        if row["check"]["outcome"] == "Stable" and not _monotone(hist):
            problems.append(row["label"])
    checked = len(corpus) + len(exhaustive_rows)
    ok = not problems
    record(acceptance_log, 5, ok, f"{checked} pairs: iterations<=n, rounds<=n, c strictly monotone; "
                                  f"{len(problems)} violations")
    assert ok, problems[:5]


def test_criterion_6_signature_identities(acceptance_log):
    rng = random.Random(66)
    first_col = 0
    for t in range(50):
        n = rng.randint(1, 14)
        g = generate_random_graph(n, rng.choice(PROBS), rng.getrandbits(32))
        # random valid diagonals: classes spaced 4n apart starting above n-1
        d = DiagonalAssignment(tuple(4 * n * rng.randint(1, n) for _ in range(n)))
        sig = graph_signature(g, d)
        assert all(sig[i][0] == d[i] ** 2 + g.degree(i) for i in range(n))
        first_col += 1
    traces = 0
    for n in range(1, 7):
        for s in range(4):
            g = generate_random_graph(n, PROBS[s % 3], 600 + 10 * n + s)
            d = DiagonalAssignment(tuple(4 * n * (1 + (v * 7 + s) % n) for v in range(n)))
            b = embed_with_diagonal(g, d)
            sig = graph_signature(g, d)
            power = b
            for k in range(1, n + 1):
                # dense route: B^{2k} from repeated products, independent of the sparse signature route
                square = multiply(power, power)
                assert sum(sig[i][k - 1] for i in range(n)) == square.trace()
                power = multiply(power, b)
                traces += 1
    record(acceptance_log, 6, True, f"sig[i][1]=d_i^2+deg(i) on {first_col} instances; "
                                    f"sum_i sig[i][k]=trace(B^2k) on {traces} (n<=6, k<=n) cases")


def test_criterion_7_p3_trace(acceptance_log):
    d = DiagonalAssignment((12, 12, 12))
    sig = graph_signature(P3, d)
    values_ok = [row[0] for row in sig.rows] == [145, 146, 145] and sig[0][1] == 21602 and sig[1][1] == 22468
    out = refine_fixpoint(P3, P3)
    classes = [tuple(v + 1 for v in a) for a, _ in out.partition.classes] if isinstance(out, Stable) else []
    ok = values_ok and sorted(classes) == [(1, 3), (2,)] and out.iterations == 2
    record(acceptance_log, 7, ok, f"k=1 {[r[0] for r in sig.rows]}, k=2 {[r[1] for r in sig.rows]}, "
                                  f"classes {sorted(classes)} after {out.iterations} iterations")
    assert ok


def test_criterion_8_runtime_n64(acceptance_log):
    budget = 600.0
    times = []
    for s, p in enumerate(PROBS):
        g = generate_random_graph(64, p, 6400 + s)
        h = apply_permutation(g, random_permutation(64, 6500 + s))
        t0 = time.perf_counter()
        out = refine_fixpoint(g, h)
        times.append(time.perf_counter() - t0)
        assert isinstance(out, Stable)
    ok = max(times) < budget
    record(acceptance_log, 8, ok, "check at n=64: " + ", ".join(f"{t:.1f}s" for t in times) + " (budget 600s each)")
    assert ok
