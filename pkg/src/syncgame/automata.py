"""Complete deterministic finite automata: representation, word actions, I/O.

A DFA here is an unpointed pair (states, alphabet) with a total action:
no initial or final states, no partial transitions. States are the
integers 0..n-1; letters are referenced by index internally and by name
in the JSON format.

Canonical JSON format::

    {"states": n, "alphabet": ["a", "b"], "delta": {"a": [..], "b": [..]}}

where ``delta[letter][q]`` is the state reached from ``q`` on ``letter``
and the delta keys are exactly the alphabet.

Token sets (for the synchronization game) are bit masks over 0..n-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from collections.abc import Iterable, Sequence

from .errors import AutomatonFormatError
from .util import SplitMix64

# Bit masks index positions in a machine word; game solving materializes
# arrays of size 2**n, so game-facing commands refuse larger automata.
GAME_STATE_CAP = 24

Word = tuple[int, ...]


@dataclass(frozen=True)
class Dfa:
    """A complete DFA: ``delta[a][q]`` is the a-successor of state q.

    Immutable after construction; safe to share across workers.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise AutomatonFormatError("automaton needs at least one state")
        if not self.alphabet:
            raise AutomatonFormatError("alphabet must be nonempty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise AutomatonFormatError("duplicate letter names")
        if any(not isinstance(a, str) or not a for a in self.alphabet):
            raise AutomatonFormatError("letter names must be nonempty strings")
        if len(self.delta) != len(self.alphabet):
            raise AutomatonFormatError("delta must list one row per letter")
        for name, row in zip(self.alphabet, self.delta):
            if len(row) != self.n:
                raise AutomatonFormatError(
                    f"delta[{name!r}] must list {self.n} targets, got {len(row)}"
                )
            for q, t in enumerate(row):
                if not isinstance(t, int) or isinstance(t, bool) or not 0 <= t < self.n:
                    raise AutomatonFormatError(
                        f"delta[{name!r}][{q}] = {t!r} is not a state in 0..{self.n - 1}"
                    )

    @property
    def k(self) -> int:
        return len(self.alphabet)

    def letter_index(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            raise AutomatonFormatError(f"unknown letter {name!r}") from None

    def word(self, names: Iterable[str]) -> Word:
        """Build a word (tuple of letter indices) from letter names."""
        return tuple(self.letter_index(x) for x in names)

    def word_names(self, w: Sequence[int]) -> str:
        return "".join(self.alphabet[a] for a in w)


def parse_dfa(text: str) -> Dfa:
    """Parse the canonical JSON format, validating totality and ranges."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise AutomatonFormatError(f"malformed JSON: {e}") from None
    if not isinstance(doc, dict):
        raise AutomatonFormatError("top level must be a JSON object")
    for key in ("states", "alphabet", "delta"):
        if key not in doc:
            raise AutomatonFormatError(f"missing key {key!r}")
    n = doc["states"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise AutomatonFormatError("'states' must be an integer")
    alphabet = doc["alphabet"]
    if not isinstance(alphabet, list):
        raise AutomatonFormatError("'alphabet' must be a list of letter names")
    delta = doc["delta"]
    if not isinstance(delta, dict):
        raise AutomatonFormatError("'delta' must be an object keyed by letter")
    if set(delta.keys()) != set(alphabet) or len(alphabet) != len(set(alphabet)):
        raise AutomatonFormatError("delta keys must be exactly the alphabet")
    rows = []
    for name in alphabet:
        row = delta[name]
        if not isinstance(row, list):
            raise AutomatonFormatError(f"delta[{name!r}] must be a list")
        rows.append(tuple(row))
    return Dfa(n=n, alphabet=tuple(alphabet), delta=tuple(rows))


def serialize_dfa(dfa: Dfa) -> str:
    """Canonical JSON; round-trips bit-exactly through parse_dfa."""
    doc = {
        "states": dfa.n,
        "alphabet": list(dfa.alphabet),
        "delta": {name: list(row) for name, row in zip(dfa.alphabet, dfa.delta)},
    }
    return json.dumps(doc)


def apply(dfa: Dfa, q: int, w: Sequence[int]) -> int:
    """Act on a single state: left-to-right fold of the letter actions."""
    for a in w:
        q = dfa.delta[a][q]
    return q


def image(dfa: Dfa, s: int, w: Sequence[int]) -> int:
    """Act on a state set (bit mask); cardinality never increases."""
    for a in w:
        row = dfa.delta[a]
        t = 0
        m = s
        while m:
            q = (m & -m).bit_length() - 1
            t |= 1 << row[q]
            m &= m - 1
        s = t
    return s


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(states: Iterable[int]) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def states_of(mask: int) -> list[int]:
    out = []
    while mask:
        q = (mask & -mask).bit_length() - 1
        out.append(q)
        mask &= mask - 1
    return out


def letter_images(dfa: Dfa) -> list[list[int]]:
    """Per-letter table of set images: tables[a][mask] = image of mask.

    Sized 2**n per letter; used by the game solver. Built by bit DP.
    """
    n = dfa.n
    size = 1 << n
    tables = []
    for a in range(dfa.k):
        row = dfa.delta[a]
        tab = [0] * size
        for q in range(n):
            bit = 1 << q
            tbit = 1 << row[q]
            # masks with q as highest new bit extend all smaller masks
            for m in range(bit):
                tab[bit | m] = tbit | tab[m]
        tables.append(tab)
    return tables


def _letter_names(k: int) -> tuple[str, ...]:
    if k > 26:
        raise AutomatonFormatError("generated alphabets support at most 26 letters")
    return tuple(chr(ord("a") + i) for i in range(k))


def random_dfa(n: int, k: int, seed: int) -> Dfa:
    """Uniform random delta from the seeded splitmix stream.

    Entries are drawn letter by letter, state 0..n-1 within each letter,
    so results are reproducible across implementations of the same PRNG.
    """
    if n < 1 or k < 1:
        raise AutomatonFormatError("random automaton needs n >= 1 and k >= 1")
    rng = SplitMix64(seed)
    delta = tuple(tuple(rng.below(n) for _ in range(n)) for _ in range(k))
    return Dfa(n=n, alphabet=_letter_names(k), delta=delta)


def builtin(name: str, params: Sequence[int] = ()) -> Dfa:
    """Bundled automata.

    - ``paper_example``: the three-state demo with a sink state 0 and a
      two-cycle 1<->2 on b; synchronizing, but the second player can keep
      two tokens alive forever by copying moves.
    - ``brandt_minimal``: the minimal automaton of the language (ab)*;
      its transition monoid is the six-element Brandt monoid B2^1.
    - ``cerny n``: the classic slowly synchronizing family whose shortest
      reset words have length (n-1)^2.
    - ``random n k seed``: uniform random delta, deterministic per seed.
    """
    if name == "paper_example":
        if params:
            raise AutomatonFormatError("paper_example takes no parameters")
        return Dfa(n=3, alphabet=("a", "b"), delta=((0, 0, 2), (0, 2, 1)))
    if name == "brandt_minimal":
        if params:
            raise AutomatonFormatError("brandt_minimal takes no parameters")
        return Dfa(n=3, alphabet=("a", "b"), delta=((0, 2, 0), (0, 0, 1)))
    if name == "cerny":
        if len(params) != 1 or params[0] < 2:
            raise AutomatonFormatError("cerny takes one parameter n >= 2")
        n = params[0]
        cycle = tuple((i + 1) % n for i in range(n))
        bump = tuple(1 if i == 0 else i for i in range(n))
        return Dfa(n=n, alphabet=("a", "b"), delta=(cycle, bump))
    if name == "random":
        if len(params) != 3:
            raise AutomatonFormatError("random takes parameters (n, k, seed)")
        return random_dfa(params[0], params[1], params[2])
    raise AutomatonFormatError(f"unknown builtin {name!r}")


def to_dot(dfa: Dfa, tokens: int | None = None) -> str:
    """GraphViz DOT export; token-holding states are filled gray.

    Parallel edges with the same endpoints are merged into one edge whose
    label lists the letters, matching the usual drawing of such automata.
    """
    lines = ["digraph dfa {", "  rankdir=LR;", '  node [shape=circle, fontname="sans-serif"];']
    for q in range(dfa.n):
        if tokens is not None and (tokens >> q) & 1:
            lines.append(f'  {q} [style=filled, fillcolor=gray];')
        else:
            lines.append(f"  {q};")
    labels: dict[tuple[int, int], list[str]] = {}
    for name, row in zip(dfa.alphabet, dfa.delta):
        for q, t in enumerate(row):
            labels.setdefault((q, t), []).append(name)
    for (q, t), names in sorted(labels.items()):
        lines.append(f'  {q} -> {t} [label="{",".join(names)}"];')
    lines.append("}")
    return "\n".join(lines)
