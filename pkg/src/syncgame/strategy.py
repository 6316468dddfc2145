"""Round-based winning strategy for the synchronizing player, with
exhaustive verification against every opposing reply.

The strategy is purely algebraic: it never looks at token positions.
Playing on a synchronizing automaton whose transition monoid has its
regular D-classes closed under products, it works through m rounds
(m = nilpotency index of the least component S_z over its own kernel).
In each round Alice opens with a free letter; after every reply by Bob
she checks whether the letters of the round compose into S_z. If they
do, the round closes; if not, the round word lies in some component
y != z and she answers with a letter a whose component does not sit
above y (one always exists, else y would sit above the least component).
Each reply pair then moves the round word strictly down the component
order, so a round closes within `height` pairs. The m closed rounds
multiply into the kernel of S_z, which consists of constant maps, so the
full play spells a reset word no matter what Bob does.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from .automata import Dfa, full_mask, image
from .errors import NotSynchronizingError, ProtocolError, SyncgameError
from .green import green_relations, is_in_ds
from .monoid import Monoid, is_constant, transition_monoid
from .semilattice import SemilatticeDecomposition, decompose
from .sync import _unmergeable_pair
from .util import SplitMix64, popcount


class Phase(str, Enum):
    ALICE_FIRST = "alice_first"
    BOB_REPLY = "bob_reply"
    ALICE_DESCENT = "alice_descent"


@dataclass(frozen=True, eq=False)
class StrategyContext:
    """Shared immutable data: forked strategy states all point here."""

    dfa: Dfa
    monoid: Monoid
    decomp: SemilatticeDecomposition
    opener_seed: int | None


@dataclass(frozen=True)
class StrategyState:
    """One point of the strategy protocol; copy-on-update."""

    ctx: StrategyContext = field(compare=False)
    round_no: int  # 1..m
    pair_index: int  # completed reply pairs in the current round
    round_elem: int  # monoid element of the letters played this round
    closed_product: int  # product of the closed rounds' elements
    awaiting: Phase
    accumulated: tuple[int, ...]
    complete: bool

    @property
    def expected_player(self) -> str:
        return "bob" if self.awaiting is Phase.BOB_REPLY else "alice"


def new_strategy(dfa: Dfa, opener_seed: int | None = None) -> StrategyState:
    """Build monoid and decomposition; fail fast with a witness otherwise.

    opener_seed switches the round openers from the deterministic default
    (first alphabet letter) to seeded pseudo-random choices; the strategy
    wins with any opener, so both modes verify.
    """
    stuck = _unmergeable_pair(dfa)
    if stuck is not None:
        raise NotSynchronizingError(stuck)
    m = transition_monoid(dfa)
    d = decompose(m, green_relations(m))  # raises NotDsError with witness
    ctx = StrategyContext(dfa=dfa, monoid=m, decomp=d, opener_seed=opener_seed)
    return StrategyState(
        ctx=ctx,
        round_no=1,
        pair_index=0,
        round_elem=0,
        closed_product=0,
        awaiting=Phase.ALICE_FIRST,
        accumulated=(),
        complete=False,
    )


def _opener(st: StrategyState) -> int:
    seed = st.ctx.opener_seed
    if seed is None:
        return 0
    rng = SplitMix64(seed)
    value = 0
    for _ in range(st.round_no):
        value = rng.next_u64()
    return value % st.ctx.dfa.k


def alice_letter(st: StrategyState) -> int:
    """The strategy's next letter; defined only on Alice's turn."""
    if st.complete:
        raise ProtocolError("strategy already complete")
    if st.awaiting is Phase.ALICE_FIRST:
        return _opener(st)
    if st.awaiting is Phase.BOB_REPLY:
        raise ProtocolError("waiting for the opponent's reply")
    d = st.ctx.decomp
    y = d.component_of[st.round_elem]
    if y == d.z:
        raise ProtocolError("round should have closed before a descent move")
    for a, ya in enumerate(d.letter_component):
        if not d.leq(y, ya):
            return a
    raise SyncgameError(
        "no descent letter exists; impossible when regular D-classes are subsemigroups"
    )


def observe(st: StrategyState, letter: int, player: str | None = None) -> StrategyState:
    """Advance the protocol by one played letter (either player's).

    After Bob's reply the round word is tested for membership in the
    least component; on membership the round closes and its element is
    multiplied into the closed product.
    """
    if st.complete:
        raise ProtocolError("strategy already complete")
    if player is not None and player != st.expected_player:
        raise ProtocolError(f"out of turn: expected a letter from {st.expected_player}")
    m = st.ctx.monoid
    d = st.ctx.decomp
    elem = m.right_cayley[st.round_elem][letter]
    accumulated = st.accumulated + (letter,)
    if st.awaiting is not Phase.BOB_REPLY:
        return replace(
            st, round_elem=elem, awaiting=Phase.BOB_REPLY, accumulated=accumulated
        )
    if d.component_of[elem] == d.z:
        closed = m.mul(st.closed_product, elem)
        if st.round_no == d.m:
            return replace(
                st,
                round_elem=elem,
                closed_product=closed,
                pair_index=st.pair_index + 1,
                awaiting=Phase.ALICE_FIRST,
                accumulated=accumulated,
                complete=True,
            )
        return replace(
            st,
            round_no=st.round_no + 1,
            pair_index=0,
            round_elem=0,
            closed_product=closed,
            awaiting=Phase.ALICE_FIRST,
            accumulated=accumulated,
        )
    return replace(
        st,
        round_elem=elem,
        pair_index=st.pair_index + 1,
        awaiting=Phase.ALICE_DESCENT,
        accumulated=accumulated,
    )


def strategy_length_bound(d: SemilatticeDecomposition) -> int:
    """Letters played by both sides: m rounds of at most `height` pairs."""
    return 2 * d.m * d.height


@dataclass
class VerifyReport:
    passed: bool
    branches: int
    nodes: int
    max_letters: int
    bound: int
    full_playout: bool
    openers: str
    longest_word: tuple[int, ...] | None
    counterexample: tuple[int, ...] | None
    failure: str | None


def verify_exhaustive(
    dfa: Dfa,
    full_playout: bool = False,
    openers: str = "first",
    opener_seed: int | None = None,
    memo_cap: int = 1_000_000,
) -> VerifyReport:
    """Explore the full game tree: the strategy vs. every Bob reply.

    Asserts that every branch reaches a single token within the length
    bound. With full_playout the play ignores early token collapse and
    runs to the close of round m, asserting that the accumulated word
    acts as a constant map, i.e. is a reset word outright.

    openers: "first" plays the configured opener; "all" additionally
    branches over every possible round-opening letter of Alice.

    Subtrees are memoized on (tokens, round, round element, phase) plus
    the closed-round product in full mode, where the final constant check
    depends on it.
    """
    if openers not in ("first", "all"):
        raise SyncgameError("openers must be 'first' or 'all'")
    root = new_strategy(dfa, opener_seed=opener_seed)
    ctx = root.ctx
    m = ctx.monoid
    bound = strategy_length_bound(ctx.decomp)
    k = dfa.k
    start_tokens = full_mask(dfa.n)

    # memo: key -> (max letters below, suffix of a longest branch)
    memo: dict[tuple, tuple[int, tuple[int, ...]]] = {}
    in_progress: set[tuple] = set()
    stats = {"branches": 0}

    class _Failure(Exception):
        def __init__(self, reason: str, suffix: tuple[int, ...]):
            self.reason = reason
            self.suffix = suffix

    def key_of(tokens: int, st: StrategyState) -> tuple:
        closed = st.closed_product if full_playout else -1
        return (tokens, st.round_no, st.round_elem, st.awaiting, closed)

    def explore(tokens: int, st: StrategyState) -> tuple[int, tuple[int, ...]]:
        key = key_of(tokens, st)
        if key in memo:
            return memo[key]
        if key in in_progress:
            raise _Failure("cycle: the play can be driven forever", ())
        if len(memo) + len(in_progress) > memo_cap:
            raise SyncgameError(f"verification exceeded memo cap of {memo_cap}")
        in_progress.add(key)

        if openers == "all" and st.awaiting is Phase.ALICE_FIRST:
            alice_moves = range(k)
        else:
            alice_moves = [alice_letter(st)]
        best: tuple[int, tuple[int, ...]] = (0, ())
        for a in alice_moves:
            st1 = observe(st, a)
            tokens1 = image(dfa, tokens, (a,))
            if not full_playout and popcount(tokens1) == 1:
                stats["branches"] += 1
                best = max(best, (1, (a,)))
                continue
            for b in range(k):
                st2 = observe(st1, b)
                tokens2 = image(dfa, tokens1, (b,))
                suffix = (a, b)
                if st2.complete:
                    if not is_constant(m.elements[st2.closed_product]):
                        raise _Failure("completed play is not a reset word", suffix)
                    if popcount(tokens2) != 1:
                        raise _Failure("constant word left several tokens", suffix)
                    stats["branches"] += 1
                    best = max(best, (2, suffix))
                elif not full_playout and popcount(tokens2) == 1:
                    stats["branches"] += 1
                    best = max(best, (2, suffix))
                else:
                    try:
                        sub, sub_suffix = explore(tokens2, st2)
                    except _Failure as f:
                        raise _Failure(f.reason, suffix + f.suffix) from None
                    best = max(best, (2 + sub, suffix + sub_suffix))
        in_progress.discard(key)
        memo[key] = best
        return best

    try:
        if not full_playout and popcount(start_tokens) == 1:
            max_letters, longest = 0, ()
            stats["branches"] = 1
        else:
            max_letters, longest = explore(start_tokens, root)
        if max_letters > bound:
            return VerifyReport(
                passed=False,
                branches=stats["branches"],
                nodes=len(memo),
                max_letters=max_letters,
                bound=bound,
                full_playout=full_playout,
                openers=openers,
                longest_word=None,
                counterexample=longest,
                failure=f"branch used {max_letters} letters, bound is {bound}",
            )
    except _Failure as f:
        return VerifyReport(
            passed=False,
            branches=stats["branches"],
            nodes=len(memo),
            max_letters=-1,
            bound=bound,
            full_playout=full_playout,
            openers=openers,
            longest_word=None,
            counterexample=f.suffix,
            failure=f.reason,
        )
    return VerifyReport(
        passed=True,
        branches=stats["branches"],
        nodes=len(memo),
        max_letters=max_letters,
        bound=bound,
        full_playout=full_playout,
        openers=openers,
        longest_word=longest if full_playout else None,
        counterexample=None,
        failure=None,
    )
