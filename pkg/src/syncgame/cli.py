"""Command-line frontend: a thin client over the core package.

Commands mirror the service: analyze / solve / verify work on automaton
files, play hosts an interactive terminal session through the same
session machinery the HTTP service uses, batch runs the experiment
harness, serve starts the HTTP service.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .analysis import examine, full_analysis
from .automata import builtin as make_builtin
from .automata import parse_dfa, serialize_dfa, states_of, to_dot
from .batch import records_to_jsonl, run_batch
from .errors import SyncgameError
from .game import Turn
from .sessions import SessionStore
from .strategy import verify_exhaustive


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dfa(fh.read())


def friendly_errors(fn):
    """Surface domain errors as clean messages, not tracebacks."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SyncgameError as e:
            raise click.ClickException(str(e)) from None

    return wrapper


@click.group()
def main():
    """Synchronization games on finite automata."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@friendly_errors
def analyze(file):
    """Full algebraic and game analysis of an automaton file."""
    doc = full_analysis(examine(_load(file)))
    click.echo(json.dumps(doc, indent=2))


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@friendly_errors
def solve(file):
    """Winner, forced distance, and principal variation from the start."""
    from .analysis import classification_record
    from .game import principal_variation, solve as game_solve, start_position

    dfa = _load(file)
    sol = game_solve(dfa)
    pv, finished = principal_variation(sol)
    out = {
        "winner": sol.winner_from_start.value,
        "dist": sol.dist_of(start_position(dfa)),
        "pv": [dfa.alphabet[a] for a in pv],
        "pv_finished": finished,
    }
    click.echo(json.dumps(out))


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--full-playout", is_flag=True, help="run every branch to the close of the last round")
@click.option("--openers", type=click.Choice(["first", "all"]), default="first")
@click.option("--seed", type=int, default=None, help="seeded random round openers")
@friendly_errors
def verify(file, full_playout, openers, seed):
    """Exhaustively verify the constructive strategy against every reply."""
    dfa = _load(file)
    report = verify_exhaustive(
        dfa, full_playout=full_playout, openers=openers, opener_seed=seed
    )
    click.echo(f"result: {'PASS' if report.passed else 'FAIL'}")
    click.echo(f"branches explored: {report.branches}")
    click.echo(f"max letters used: {report.max_letters}")
    click.echo(f"length bound: {report.bound}")
    if report.longest_word is not None:
        click.echo(f"longest reset word built: {dfa.word_names(report.longest_word)}")
    if not report.passed:
        click.echo(f"failure: {report.failure}")
        click.echo(f"counterexample letters: {dfa.word_names(report.counterexample)}")
        sys.exit(1)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--human", type=click.Choice(["alice", "bob"]), required=True)
@click.option("--engine", type=click.Choice(["auto", "paper", "optimal"]), default="auto")
@click.option("--seed", type=int, default=None)
@friendly_errors
def play(file, human, engine, seed):
    """Play the synchronization game in the terminal."""
    dfa = _load(file)
    store = SessionStore()
    session = store.create(
        dfa, human_side=Turn(human), engine_kind=None if engine == "auto" else engine, seed=seed
    )
    click.echo(f"engine: {session.engine_kind} as {session.engine_side.value}; "
               f"prediction: {session.winner_prediction.value} wins")

    def show():
        tokens = states_of(session.position.tokens)
        history = dfa.word_names(session.history)
        click.echo(f"tokens: {tokens}  history: {history or '-'}  turn: {session.position.turn.value}")

    show()
    while session.status == "ongoing":
        try:
            letter = click.prompt(f"your letter {list(dfa.alphabet)}", type=str)
        except (click.Abort, EOFError):
            click.echo("aborted")
            return
        if letter in ("q", "quit"):
            return
        try:
            session = store.move(session.id, letter)
        except SyncgameError as e:
            click.echo(f"rejected: {e}")
            continue
        show()
    click.echo("game over: only one token remains; the synchronizing side wins")


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--mode", type=click.Choice(["exhaustive", "sample"]), default="exhaustive")
@click.option("--count", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--jobs", type=int, default=1)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write JSONL here instead of stdout")
@friendly_errors
def batch(n, k, mode, count, seed, jobs, out):
    """Classify a family of automata; JSON-lines records plus a summary."""
    records, summary = run_batch(n, k, mode=mode, count=count, seed=seed, jobs=jobs)
    text = records_to_jsonl(records, summary)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        click.echo(f"wrote {len(records)} records to {out}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
@friendly_errors
def serve(host, port):
    """Start the HTTP service."""
    import uvicorn

    uvicorn.run("syncgame.service.app:app", host=host, port=port)


@main.command("builtin")
@click.argument("name")
@click.argument("params", nargs=-1, type=int)
@click.option("--dot", is_flag=True, help="emit GraphViz DOT instead of JSON")
@friendly_errors
def builtin_cmd(name, params, dot):
    """Emit a bundled automaton (paper_example, brandt_minimal, cerny, random)."""
    dfa = make_builtin(name, list(params))
    click.echo(to_dot(dfa) if dot else serialize_dfa(dfa))


if __name__ == "__main__":
    main()
