"""HTTP service wrapping the core package.

Endpoints (JSON in/out, errors as {code, message} with 4xx status):

  POST /automata                    body = canonical automaton JSON -> {id}
  GET  /automata/{id}               the stored automaton JSON
  GET  /automata/{id}/analysis      classification record
  GET  /automata/{id}/solution      {winner, dist, pv}
  POST /games                       {automaton_id, human_side, engine_kind, seed}
  GET  /games/{id}                  live game state
  POST /games/{id}/moves            {letter} -> state incl. the engine's reply
"""

from __future__ import annotations

import json
import threading
import uuid

from fastapi import Body, FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..analysis import classification_record, examine
from ..automata import Dfa, parse_dfa, serialize_dfa
from ..errors import (
    AutomatonFormatError,
    CapExceededError,
    SessionError,
    SyncgameError,
)
from ..game import GameSolution, Turn, principal_variation, solve, start_position
from ..sessions import SessionStore
from .schemas import (
    AutomatonCreated,
    ClassificationOut,
    ErrorOut,
    GameCreate,
    GameCreated,
    GameStateOut,
    MoveIn,
    SolutionOut,
)


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


class _AutomatonEntry:
    def __init__(self, dfa: Dfa):
        self.dfa = dfa
        self.lock = threading.Lock()
        self.classification: dict | None = None
        self.solution: GameSolution | None = None


class _Store:
    def __init__(self):
        self.automata: dict[str, _AutomatonEntry] = {}
        self.sessions = SessionStore()
        self.lock = threading.Lock()

    def add(self, dfa: Dfa) -> str:
        automaton_id = uuid.uuid4().hex[:12]
        with self.lock:
            self.automata[automaton_id] = _AutomatonEntry(dfa)
        return automaton_id

    def entry(self, automaton_id: str) -> _AutomatonEntry:
        with self.lock:
            entry = self.automata.get(automaton_id)
        if entry is None:
            raise ApiError(404, "automaton_not_found", f"no automaton with id {automaton_id!r}")
        return entry


def create_app() -> FastAPI:
    app = FastAPI(title="syncgame", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = _Store()
    app.state.store = store

    @app.exception_handler(ApiError)
    async def _api_error(_: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content=ErrorOut(code=exc.code, message=exc.message).model_dump(),
        )

    @app.exception_handler(SyncgameError)
    async def _domain_error(_: Request, exc: SyncgameError):
        if isinstance(exc, SessionError):
            status = 404 if exc.code.endswith("not_found") else 409
            return JSONResponse(
                status_code=status,
                content=ErrorOut(code=exc.code, message=str(exc)).model_dump(),
            )
        code = {
            AutomatonFormatError: "invalid_automaton",
            CapExceededError: "cap_exceeded",
        }.get(type(exc), "domain_error")
        return JSONResponse(
            status_code=422 if code == "cap_exceeded" else 400,
            content=ErrorOut(code=code, message=str(exc)).model_dump(),
        )

    @app.post("/automata", response_model=AutomatonCreated)
    def create_automaton(payload: dict = Body(...)):
        dfa = parse_dfa(json.dumps(payload))
        return AutomatonCreated(id=store.add(dfa))

    @app.get("/automata/{automaton_id}")
    def get_automaton(automaton_id: str):
        entry = store.entry(automaton_id)
        return json.loads(serialize_dfa(entry.dfa))

    @app.get("/automata/{automaton_id}/analysis", response_model=ClassificationOut)
    def get_analysis(automaton_id: str):
        entry = store.entry(automaton_id)
        with entry.lock:
            if entry.classification is None:
                entry.classification = classification_record(examine(entry.dfa))
        return entry.classification

    @app.get("/automata/{automaton_id}/solution", response_model=SolutionOut)
    def get_solution(automaton_id: str):
        entry = store.entry(automaton_id)
        with entry.lock:
            if entry.solution is None:
                entry.solution = solve(entry.dfa)
        sol = entry.solution
        pv, _ = principal_variation(sol)
        return SolutionOut(
            winner=sol.winner_from_start.value,
            dist=sol.dist_of(start_position(entry.dfa)),
            pv=[entry.dfa.alphabet[a] for a in pv],
        )

    @app.post("/games", response_model=GameCreated)
    def create_game(req: GameCreate):
        entry = store.entry(req.automaton_id)
        try:
            side = Turn(req.human_side)
        except ValueError:
            raise ApiError(400, "invalid_side", "human_side must be 'alice' or 'bob'")
        with entry.lock:
            if entry.solution is None:
                entry.solution = solve(entry.dfa)
        session = store.sessions.create(
            entry.dfa,
            human_side=side,
            engine_kind=req.engine_kind,
            seed=req.seed,
            automaton_id=req.automaton_id,
            solution=entry.solution,
        )
        state = GameStateOut(**session.snapshot())
        return GameCreated(game_id=session.id, position=state)

    @app.get("/games/{game_id}", response_model=GameStateOut)
    def get_game(game_id: str):
        return store.sessions.get(game_id).snapshot()

    @app.post("/games/{game_id}/moves", response_model=GameStateOut)
    def post_move(game_id: str, move: MoveIn):
        return store.sessions.move(game_id, move.letter).snapshot()

    return app


app = create_app()
