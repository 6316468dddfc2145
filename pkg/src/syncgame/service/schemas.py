"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel


class AutomatonCreated(BaseModel):
    id: str


class ClassificationOut(BaseModel):
    n: int
    k: int
    synchronizing: bool
    reset_length: int | None
    in_ds: bool
    a_automaton: bool | None
    definite_degree: int | None
    weakly_acyclic: bool
    commutative: bool
    r_trivial: bool
    m: int | None
    height: int | None
    strategy_verified: bool | None


class SolutionOut(BaseModel):
    winner: str
    dist: int | None
    pv: list[str]


class GameCreate(BaseModel):
    automaton_id: str
    human_side: str
    engine_kind: str | None = None
    seed: int | None = None


class GameStateOut(BaseModel):
    game_id: str
    automaton_id: str | None
    tokens: list[int]
    turn: str
    history: list[str]
    status: str
    winner: str | None
    winner_prediction: str | None
    human_side: str
    engine_kind: str


class GameCreated(BaseModel):
    game_id: str
    position: GameStateOut


class MoveIn(BaseModel):
    letter: str


class ErrorOut(BaseModel):
    code: str
    message: str
