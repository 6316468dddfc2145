"""Batch harness: classify whole families of automata and scan for
violations of the strategy theorem, the classifier implications, and the
open reset-length question.

Exhaustive mode enumerates every n-state k-letter automaton (raw counts,
no deduplication up to isomorphism, so n=3, k=2 gives exactly 729).
Sample mode draws deterministic automata from the seeded splitmix stream.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor

from .automata import Dfa, serialize_dfa
from .analysis import classification_record, examine, record_violations
from .errors import SyncgameError
from .util import SplitMix64

_EXHAUSTIVE_N = 3
_EXHAUSTIVE_K = 2


def _letter_names(k: int) -> tuple[str, ...]:
    return tuple(chr(ord("a") + i) for i in range(k))


def enumerate_dfas(n: int, k: int):
    """All n**(n*k) automata with n states and k letters, in table order."""
    alphabet = _letter_names(k)
    rows = list(itertools.product(range(n), repeat=n))
    for combo in itertools.product(rows, repeat=k):
        yield Dfa(n=n, alphabet=alphabet, delta=combo)


def sample_dfas(n: int, k: int, count: int, seed: int):
    """`count` automata drawn from one splitmix stream; reproducible."""
    alphabet = _letter_names(k)
    rng = SplitMix64(seed)
    for _ in range(count):
        delta = tuple(tuple(rng.below(n) for _ in range(n)) for _ in range(k))
        yield Dfa(n=n, alphabet=alphabet, delta=delta)


def examine_record(dfa: Dfa) -> dict:
    """One batch worker unit: record plus summary-relevant extras."""
    ex = examine(dfa)
    record = classification_record(ex)
    record["violations"] = record_violations(record)
    record["lemma_kernel_agrees"] = ex.kernel_synchronizing == ex.synchronizing
    return record


def _worker(serialized: str) -> dict:
    from .automata import parse_dfa

    return examine_record(parse_dfa(serialized))


def run_batch(
    n: int,
    k: int,
    mode: str = "exhaustive",
    count: int | None = None,
    seed: int | None = None,
    jobs: int = 1,
) -> tuple[list[dict], dict]:
    """Classify a family of automata; returns (records, summary).

    The summary counts Theorem-style violations (always expected to be
    zero), reports agreement of the two synchronization checks, asserts
    nothing about the reset-length question but lists every game-winning
    automaton whose shortest reset word is longer than n-1.
    """
    if mode == "exhaustive":
        if n > _EXHAUSTIVE_N or k > _EXHAUSTIVE_K:
            raise SyncgameError(
                f"exhaustive mode is capped at n <= {_EXHAUSTIVE_N}, k <= {_EXHAUSTIVE_K}"
            )
        dfas = list(enumerate_dfas(n, k))
    elif mode == "sample":
        if count is None or seed is None:
            raise SyncgameError("sample mode needs count and seed")
        dfas = list(sample_dfas(n, k, count, seed))
    else:
        raise SyncgameError(f"unknown batch mode {mode!r}")

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(
                pool.map(_worker, [serialize_dfa(d) for d in dfas], chunksize=16)
            )
    else:
        records = [examine_record(d) for d in dfas]

    for i, (record, dfa) in enumerate(zip(records, dfas)):
        record["index"] = i
        record["automaton"] = json.loads(serialize_dfa(dfa))["delta"]

    theorem_violations = [
        r["index"]
        for r in records
        if r["in_ds"] and r["synchronizing"] and r["strategy_verified"] is not True
    ]
    implication_violations = [r["index"] for r in records if r["violations"]]
    lemma_disagreements = [r["index"] for r in records if not r["lemma_kernel_agrees"]]
    ds_reset_violations = [
        r["index"]
        for r in records
        if r["in_ds"]
        and r["synchronizing"]
        and (r["reset_length"] is None or r["reset_length"] > r["n"] - 1)
    ]
    # Open question scan, report only: game-winning automata needing more
    # than n-1 letters to reset.
    question2_over_bound = [
        {"index": r["index"], "reset_length": r["reset_length"], "automaton": r["automaton"]}
        for r in records
        if r["a_automaton"] is True and r["reset_length"] is not None and r["reset_length"] > r["n"] - 1
    ]

    summary = {
        "mode": mode,
        "n": n,
        "k": k,
        "count": len(records),
        "seed": seed,
        "synchronizing": sum(1 for r in records if r["synchronizing"]),
        "in_ds": sum(1 for r in records if r["in_ds"]),
        "a_automata": sum(1 for r in records if r["a_automaton"] is True),
        "sync_ds": sum(1 for r in records if r["in_ds"] and r["synchronizing"]),
        "theorem_violations": theorem_violations,
        "implication_violations": implication_violations,
        "sync_check_disagreements": lemma_disagreements,
        "ds_reset_bound_violations": ds_reset_violations,
        "question2_over_bound": question2_over_bound,
    }
    return records, summary


def records_to_jsonl(records: list[dict], summary: dict) -> str:
    """One record per line, stable field order, summary block last."""
    lines = []
    for r in records:
        ordered = {"index": r["index"]}
        for key in (
            "n",
            "k",
            "synchronizing",
            "reset_length",
            "in_ds",
            "a_automaton",
            "definite_degree",
            "weakly_acyclic",
            "commutative",
            "r_trivial",
            "m",
            "height",
            "strategy_verified",
            "violations",
            "lemma_kernel_agrees",
            "automaton",
        ):
            ordered[key] = r[key]
        lines.append(json.dumps(ordered))
    lines.append(json.dumps({"summary": summary}))
    return "\n".join(lines) + "\n"
