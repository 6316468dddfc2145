"""Classification of a single automaton: one record tying every module together.

``examine`` runs the whole pipeline once and keeps the intermediate
objects; ``classification_record`` flattens it into the stable record
shape shared by the batch harness, the analyze command, and the HTTP
service; ``full_analysis`` is the verbose per-section document.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import GAME_STATE_CAP, Dfa, serialize_dfa
from .errors import CapExceededError
from .game import GameSolution, Turn, principal_variation, solve, start_position
from .green import DsVerdict, GreenStructure, green_relations, is_commutative, is_in_ds, is_r_trivial
from .monoid import Monoid, is_constant, kernel, transition_monoid
from .semilattice import SemilatticeDecomposition, decompose
from .strategy import VerifyReport, strategy_length_bound, verify_exhaustive
from .sync import definite_degree, is_synchronizing, is_weakly_acyclic, shortest_reset_word


@dataclass
class Examination:
    dfa: Dfa
    monoid: Monoid
    gs: GreenStructure
    ds: DsVerdict
    synchronizing: bool
    kernel_synchronizing: bool
    reset_word: tuple[int, ...] | None
    definite: int | None
    weakly_acyclic: bool
    commutative: bool
    r_trivial: bool
    decomp: SemilatticeDecomposition | None
    solution: GameSolution | None
    verify_early: VerifyReport | None
    verify_full: VerifyReport | None

    @property
    def reset_length(self) -> int | None:
        return None if self.reset_word is None else len(self.reset_word)

    @property
    def a_automaton(self) -> bool | None:
        if self.solution is None:
            return None
        return self.solution.winner_from_start is Turn.ALICE

    @property
    def strategy_verified(self) -> bool | None:
        if self.verify_early is None:
            return None
        return self.verify_early.passed and self.verify_full.passed


def examine(dfa: Dfa, verify: bool = True, cap: int = GAME_STATE_CAP) -> Examination:
    """Run every classifier; game-sized work is skipped beyond the cap."""
    m = transition_monoid(dfa)
    gs = green_relations(m)
    ds = is_in_ds(m, gs)
    sync = is_synchronizing(dfa)
    ker = kernel(m)
    kernel_sync = all(is_constant(m.elements[e]) for e in ker.members)

    reset = None
    solution = None
    if dfa.n <= cap:
        reset = shortest_reset_word(dfa, cap=cap)
        solution = solve(dfa, cap=cap)

    decomp = decompose(m, gs) if ds.in_ds else None

    verify_early = verify_full = None
    if verify and sync and ds.in_ds and dfa.n <= cap:
        verify_early = verify_exhaustive(dfa, full_playout=False)
        verify_full = verify_exhaustive(dfa, full_playout=True)

    return Examination(
        dfa=dfa,
        monoid=m,
        gs=gs,
        ds=ds,
        synchronizing=sync,
        kernel_synchronizing=kernel_sync,
        reset_word=reset,
        definite=definite_degree(dfa),
        weakly_acyclic=is_weakly_acyclic(dfa),
        commutative=is_commutative(m),
        r_trivial=is_r_trivial(m, gs),
        decomp=decomp,
        solution=solution,
        verify_early=verify_early,
        verify_full=verify_full,
    )


RECORD_FIELDS = (
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
)


def classification_record(ex: Examination) -> dict:
    return {
        "n": ex.dfa.n,
        "k": ex.dfa.k,
        "synchronizing": ex.synchronizing,
        "reset_length": ex.reset_length,
        "in_ds": ex.ds.in_ds,
        "a_automaton": ex.a_automaton,
        "definite_degree": ex.definite,
        "weakly_acyclic": ex.weakly_acyclic,
        "commutative": ex.commutative,
        "r_trivial": ex.r_trivial,
        "m": None if ex.decomp is None else ex.decomp.m,
        "height": None if ex.decomp is None else ex.decomp.height,
        "strategy_verified": ex.strategy_verified,
    }


def record_violations(record: dict) -> list[str]:
    """Names of the cross-classifier implications the record breaks."""
    out = []

    def implies(name: str, lhs: bool, rhs) -> None:
        if lhs and rhs is not True:
            out.append(name)

    sync = record["synchronizing"]
    ds = record["in_ds"]
    implies("a_automaton=>synchronizing", record["a_automaton"] is True, sync)
    implies("ds+sync=>a_automaton", ds and sync, record["a_automaton"])
    implies("ds+sync=>strategy_verified", ds and sync, record["strategy_verified"])
    definite = record["definite_degree"] is not None
    implies("definite=>ds", definite, ds)
    implies("definite=>a_automaton", definite, record["a_automaton"])
    implies("weakly_acyclic=>r_trivial", record["weakly_acyclic"], record["r_trivial"])
    implies("r_trivial=>ds", record["r_trivial"], ds)
    implies("commutative=>ds", record["commutative"], ds)
    if ds and sync:
        length = record["reset_length"]
        if length is None or length > record["n"] - 1:
            out.append("ds+sync=>reset_length<=n-1")
    return out


def _eggbox(ex: Examination) -> list[dict]:
    gs = ex.gs
    boxes: dict[int, dict] = {}
    for e in range(len(ex.monoid)):
        d = gs.d_class_of[e]
        box = boxes.setdefault(
            d, {"d_class": d, "size": 0, "r_classes": set(), "l_classes": set()}
        )
        box["size"] += 1
        box["r_classes"].add(gs.r_class_of[e])
        box["l_classes"].add(gs.l_class_of[e])
    out = []
    for d in sorted(boxes):
        box = boxes[d]
        out.append(
            {
                "d_class": d,
                "size": box["size"],
                "r_classes": len(box["r_classes"]),
                "l_classes": len(box["l_classes"]),
                "regular": gs.regular_d_class[d],
            }
        )
    return out


def eggbox_text(ex: Examination) -> str:
    lines = ["D-classes (R x L grid, size, regularity):"]
    for box in _eggbox(ex):
        reg = "regular" if box["regular"] else "non-regular"
        lines.append(
            f"  D{box['d_class']}: {box['r_classes']}x{box['l_classes']}, "
            f"{box['size']} element(s), {reg}"
        )
    return "\n".join(lines)


def full_analysis(ex: Examination) -> dict:
    """The verbose analyze document, section per module."""
    dfa = ex.dfa
    m = ex.monoid
    gs = ex.gs
    ker = kernel(m)
    doc: dict = {
        "automaton": {
            "states": dfa.n,
            "alphabet": list(dfa.alphabet),
            "json": serialize_dfa(dfa),
        },
        "monoid": {
            "size": len(m),
            "generators": {name: m.gen_of[i] for i, name in enumerate(dfa.alphabet)},
            "kernel": sorted(ker.members),
            "kernel_all_constant": ex.kernel_synchronizing,
        },
        "green": {
            "r_classes": gs.n_r,
            "l_classes": gs.n_l,
            "d_classes": gs.n_d,
            "regular_d_classes": sum(gs.regular_d_class),
            "in_ds": ex.ds.in_ds,
            "ds_witness": None
            if ex.ds.witness is None
            else {
                "a": ex.ds.witness[0],
                "b": ex.ds.witness[1],
                "d_class": ex.ds.witness[2],
                "a_word": m.witness_names(ex.ds.witness[0]),
                "b_word": m.witness_names(ex.ds.witness[1]),
            },
            "eggbox": _eggbox(ex),
            "eggbox_text": eggbox_text(ex),
        },
        "sync": {
            "synchronizing": ex.synchronizing,
            "shortest_reset": None
            if ex.reset_word is None
            else dfa.word_names(ex.reset_word),
            "reset_length": ex.reset_length,
            "definite_degree": ex.definite,
            "weakly_acyclic": ex.weakly_acyclic,
            "commutative": ex.commutative,
            "r_trivial": ex.r_trivial,
            "in_ds": ex.ds.in_ds,
        },
        "semilattice": None,
        "game": None,
        "strategy": None,
        "classification": classification_record(ex),
    }
    if ex.decomp is not None:
        d = ex.decomp
        doc["semilattice"] = {
            "components": d.n_components,
            "least_component": d.z,
            "nilpotency_index": d.m,
            "height": d.height,
            "letter_components": {
                name: d.letter_component[i] for i, name in enumerate(dfa.alphabet)
            },
            # Observed, never asserted: the two kernels may or may not match.
            "kernel_equality_observed": d.kernel_equality_observed,
        }
    if ex.solution is not None:
        pv, finished = principal_variation(ex.solution)
        doc["game"] = {
            "winner": ex.solution.winner_from_start.value,
            "dist": ex.solution.dist_of(start_position(dfa)),
            "pv": [dfa.alphabet[a] for a in pv],
            "pv_finished": finished,
            # Bob has no formal payoff for delay; distance maximization is
            # this artifact's reading of "delay as long as possible".
            "delay_policy": "maximize-distance",
        }
    if ex.verify_early is not None:
        doc["strategy"] = {
            "verified_early_stop": ex.verify_early.passed,
            "verified_full_playout": ex.verify_full.passed,
            "branches": ex.verify_full.branches,
            "max_letters": ex.verify_full.max_letters,
            "bound": ex.verify_full.bound,
            "longest_word": None
            if ex.verify_full.longest_word is None
            else dfa.word_names(ex.verify_full.longest_word),
        }
    elif ex.synchronizing and ex.ds.in_ds and ex.decomp is not None:
        doc["strategy"] = {"bound": strategy_length_bound(ex.decomp)}
    return doc
