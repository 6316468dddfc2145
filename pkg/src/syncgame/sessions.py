"""Interactive game sessions: a human on either side against an engine.

Engine kinds:
  - ``paper``: the constructive round strategy (synchronizing side only;
    the automaton must pass its preconditions);
  - ``optimal``: moves from the exact game solution, for either side.

Auto-selection prefers the constructive strategy whenever the engine
plays the synchronizing side and the automaton qualifies, else falls
back to the solver. Sessions are in-memory, serialized by a per-session
lock; identical inputs yield identical transcripts.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from .automata import Dfa, full_mask, states_of
from .errors import NotDsError, NotSynchronizingError, SessionError
from .game import GamePosition, GameSolution, Turn, optimal_move, solve, start_position, step
from .strategy import StrategyState, alice_letter, new_strategy, observe
from .util import popcount


@dataclass
class GameSession:
    id: str
    automaton_id: str | None
    dfa: Dfa
    human_side: Turn
    engine_kind: str
    seed: int | None
    position: GamePosition
    history: list[int] = field(default_factory=list)
    status: str = "ongoing"
    strategy: StrategyState | None = None
    solution: GameSolution | None = None
    winner_prediction: Turn | None = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def engine_side(self) -> Turn:
        return self.human_side.other

    @property
    def winner(self) -> Turn | None:
        return Turn.ALICE if self.status == "finished" else None

    def snapshot(self) -> dict:
        return {
            "game_id": self.id,
            "automaton_id": self.automaton_id,
            "tokens": states_of(self.position.tokens),
            "turn": self.position.turn.value,
            "history": [self.dfa.alphabet[a] for a in self.history],
            "status": self.status,
            "winner": None if self.winner is None else self.winner.value,
            "winner_prediction": None
            if self.winner_prediction is None
            else self.winner_prediction.value,
            "human_side": self.human_side.value,
            "engine_kind": self.engine_kind,
        }


def _resolve_engine(dfa: Dfa, engine_side: Turn, requested: str | None, seed: int | None):
    """Pick the engine kind; returns (kind, strategy_state_or_None)."""
    if requested in (None, "auto"):
        if engine_side is Turn.ALICE:
            try:
                return "paper", new_strategy(dfa, opener_seed=seed)
            except (NotSynchronizingError, NotDsError):
                return "optimal", None
        return "optimal", None
    if requested == "paper":
        if engine_side is not Turn.ALICE:
            raise SessionError(
                "engine_kind_invalid",
                "engine kind 'paper' plays the synchronizing side; the engine is bob here",
            )
        try:
            return "paper", new_strategy(dfa, opener_seed=seed)
        except (NotSynchronizingError, NotDsError) as e:
            raise SessionError("engine_kind_invalid", f"paper strategy unavailable: {e}")
    if requested == "optimal":
        return "optimal", None
    raise SessionError("engine_kind_invalid", f"unknown engine kind {requested!r}")


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()

    def create(
        self,
        dfa: Dfa,
        human_side: Turn,
        engine_kind: str | None = None,
        seed: int | None = None,
        automaton_id: str | None = None,
        solution: GameSolution | None = None,
    ) -> GameSession:
        if solution is None:
            solution = solve(dfa)  # enforces the game-size cap
        kind, strat = _resolve_engine(dfa, human_side.other, engine_kind, seed)
        session = GameSession(
            id=uuid.uuid4().hex[:12],
            automaton_id=automaton_id,
            dfa=dfa,
            human_side=human_side,
            engine_kind=kind,
            seed=seed,
            position=start_position(dfa),
            strategy=strat,
            solution=solution,
            winner_prediction=solution.winner_from_start,
        )
        if popcount(session.position.tokens) == 1:
            session.status = "finished"
        elif session.engine_side is Turn.ALICE:
            self._engine_move(session)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionError("game_not_found", f"no game with id {session_id!r}")
        return session

    def move(self, session_id: str, letter_name: str) -> GameSession:
        """Apply the human's letter, then the engine's reply if due."""
        session = self.get(session_id)
        with session.lock:
            if session.status == "finished":
                raise SessionError("game_finished", "the game is already over")
            if session.position.turn is not session.human_side:
                raise SessionError("not_your_turn", "it is the engine's move")
            try:
                letter = session.dfa.letter_index(letter_name)
            except Exception:
                raise SessionError("invalid_letter", f"unknown letter {letter_name!r}")
            self._apply(session, letter)
            if session.status == "ongoing":
                self._engine_move(session)
        return session

    def _apply(self, session: GameSession, letter: int) -> None:
        mover = session.position.turn
        session.position = step(session.dfa, session.position, letter)
        session.history.append(letter)
        if session.strategy is not None and not session.strategy.complete:
            session.strategy = observe(
                session.strategy, letter, player=mover.value
            )
        if popcount(session.position.tokens) == 1:
            session.status = "finished"

    def _engine_move(self, session: GameSession) -> None:
        if session.engine_kind == "paper":
            assert session.strategy is not None and not session.strategy.complete
            letter = alice_letter(session.strategy)
        else:
            letter = optimal_move(session.solution, session.position)
        self._apply(session, letter)
