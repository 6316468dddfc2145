"""The synchronization game: exact solving and optimal play for both sides.

Positions are (token bit mask, player to move). Alice wins a position once
only one token remains; Bob wins by keeping two or more tokens alive
forever. The solver runs the standard backward attractor fixpoint over
the full position space with breadth-first distance layering: an
Alice-turn node is winning iff some successor is, a Bob-turn node iff all
successors are, and positions never attracted are winning for Bob, who
can force infinite play from them.

The position space is materialized as arrays indexed by (mask, turn), so
automata are capped at GAME_STATE_CAP states.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .automata import GAME_STATE_CAP, Dfa, full_mask, letter_images
from .errors import CapExceededError, ProtocolError
from .util import popcount


class Turn(str, Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def other(self) -> "Turn":
        return Turn.BOB if self is Turn.ALICE else Turn.ALICE


@dataclass(frozen=True)
class GamePosition:
    tokens: int
    turn: Turn

    @property
    def terminal(self) -> bool:
        return popcount(self.tokens) == 1


def start_position(dfa: Dfa) -> GamePosition:
    return GamePosition(tokens=full_mask(dfa.n), turn=Turn.ALICE)


def step(dfa: Dfa, p: GamePosition, letter: int) -> GamePosition:
    """All tokens slide along the chosen letter; duplicates merge; turn flips."""
    if p.terminal:
        raise ProtocolError("game is over: only one token remains")
    tokens = 0
    m = p.tokens
    row = dfa.delta[letter]
    while m:
        q = (m & -m).bit_length() - 1
        tokens |= 1 << row[q]
        m &= m - 1
    return GamePosition(tokens=tokens, turn=p.turn.other)


_TURN_BIT = {Turn.ALICE: 0, Turn.BOB: 1}


class GameSolution:
    """Winner map and distance-to-forced-singleton for every position.

    ``dist`` is defined (>= 0) exactly on Alice-winning positions and
    counts plies under mutually optimal play: Alice minimizes, Bob
    maximizes among his forced-losing options.
    """

    def __init__(self, dfa: Dfa, img: list[list[int]], alice_wins: list[bool], dist: list[int]):
        self.dfa = dfa
        self.img = img
        self._alice_wins = alice_wins
        self._dist = dist
        start = start_position(dfa)
        self.winner_from_start: Turn = Turn.ALICE if self.wins(start) else Turn.BOB

    @staticmethod
    def _index(p: GamePosition) -> int:
        return (p.tokens << 1) | _TURN_BIT[p.turn]

    def wins(self, p: GamePosition) -> bool:
        """True when Alice forces a win from p."""
        return self._alice_wins[self._index(p)]

    def dist_of(self, p: GamePosition) -> int | None:
        d = self._dist[self._index(p)]
        return None if d < 0 else d

    def successor(self, p: GamePosition, letter: int) -> GamePosition:
        return GamePosition(tokens=self.img[letter][p.tokens], turn=p.turn.other)


def solve(dfa: Dfa, cap: int = GAME_STATE_CAP) -> GameSolution:
    if dfa.n > cap:
        raise CapExceededError(f"game solver capped at {cap} states, got {dfa.n}")
    n = dfa.n
    k = dfa.k
    img = letter_images(dfa)
    n_pos = 1 << (n + 1)  # (mask << 1 | turn); mask 0 unused
    alice_wins = [False] * n_pos
    dist = [-1] * n_pos
    rev: list[list[int]] = [[] for _ in range(n_pos)]
    pending = [0] * n_pos
    queue: deque[int] = deque()

    for mask in range(1, 1 << n):
        if popcount(mask) == 1:
            for bit in (0, 1):
                idx = (mask << 1) | bit
                alice_wins[idx] = True
                dist[idx] = 0
                queue.append(idx)
            continue
        for bit in (0, 1):
            idx = (mask << 1) | bit
            if bit == _TURN_BIT[Turn.BOB]:
                pending[idx] = k
            for a in range(k):
                succ = (img[a][mask] << 1) | (bit ^ 1)
                rev[succ].append(idx)

    bob_bit = _TURN_BIT[Turn.BOB]
    while queue:
        won = queue.popleft()
        d = dist[won]
        for pred in rev[won]:
            if alice_wins[pred]:
                continue
            if pred & 1 == bob_bit:
                pending[pred] -= 1
                if pending[pred]:
                    continue
            alice_wins[pred] = True
            dist[pred] = d + 1
            queue.append(pred)

    return GameSolution(dfa, img, alice_wins, dist)


def optimal_move(sol: GameSolution, p: GamePosition) -> int:
    """Optimal letter at p; ties broken by alphabet order.

    Alice picks a letter minimizing the successor distance. Bob escapes
    to a position Alice cannot win whenever one exists; if all successors
    are lost for him, he maximizes the distance, implementing the
    delay-as-long-as-possible objective.
    """
    if p.terminal:
        raise ProtocolError("game is over: only one token remains")
    k = sol.dfa.k
    succ_dist = [sol.dist_of(sol.successor(p, a)) for a in range(k)]
    if p.turn is Turn.ALICE:
        best, best_d = 0, None
        for a in range(k):
            d = succ_dist[a]
            if d is not None and (best_d is None or d < best_d):
                best, best_d = a, d
        return best
    for a in range(k):
        if succ_dist[a] is None:
            return a
    best, best_d = 0, -1
    for a in range(k):
        if succ_dist[a] > best_d:
            best, best_d = a, succ_dist[a]
    return best


def is_a_automaton(dfa: Dfa, cap: int = GAME_STATE_CAP) -> bool:
    """Does the synchronizing player win from the initial all-tokens position?"""
    return solve(dfa, cap=cap).winner_from_start is Turn.ALICE


def principal_variation(sol: GameSolution, max_plies: int | None = None) -> tuple[list[int], bool]:
    """Replay mutually optimal play from the start.

    Returns (letters, finished): ``finished`` is True when the play ends
    in a single token, in exactly dist plies. When Bob wins, the replay
    stops at the first repeated position, certifying an infinite game.
    """
    p = start_position(sol.dfa)
    letters: list[int] = []
    seen = {(p.tokens, p.turn)}
    while not p.terminal:
        a = optimal_move(sol, p)
        letters.append(a)
        p = sol.successor(p, a)
        key = (p.tokens, p.turn)
        if key in seen:
            return letters, False
        seen.add(key)
        if max_plies is not None and len(letters) >= max_plies:
            return letters, popcount(p.tokens) == 1
    return letters, True
