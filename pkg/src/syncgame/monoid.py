"""Transition monoids: enumeration with witnesses, Cayley graphs, kernels.

Elements are transformations of the state set, stored as image tuples
(``t[q]`` is the image of q). Composition is in word order: ``compose(s, t)``
acts as s first, then t, so the transformation of a word is the left-to-right
product of its letter transformations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Dfa
from .errors import MonoidTooLargeError, SyncgameError

Transformation = tuple[int, ...]

DEFAULT_SIZE_CAP = 100_000


def identity_map(n: int) -> Transformation:
    return tuple(range(n))


def constant_map(n: int, q: int) -> Transformation:
    return (q,) * n


def compose(s: Transformation, t: Transformation) -> Transformation:
    """Apply s first, then t: result[q] = t[s[q]]."""
    if len(s) != len(t):
        raise SyncgameError("cannot compose transformations of different degree")
    return tuple(t[x] for x in s)


def is_constant(t: Transformation) -> bool:
    first = t[0]
    return all(x == first for x in t)


class Monoid:
    """An enumerated transition monoid.

    ``elements[0]`` is the identity; the rest appear in breadth-first
    discovery order over right multiplication by generators taken in
    alphabet order. That ordering makes each element's stored witness the
    lexicographically least among its shortest words.
    """

    def __init__(self, dfa: Dfa, size_cap: int = DEFAULT_SIZE_CAP):
        n = dfa.n
        gens = [tuple(row) for row in dfa.delta]
        elements: list[Transformation] = [identity_map(n)]
        index: dict[Transformation, int] = {elements[0]: 0}
        witness: list[tuple[int, ...]] = [()]
        right: list[list[int]] = []

        head = 0
        while head < len(elements):
            src = elements[head]
            row = []
            for a, g in enumerate(gens):
                t = tuple(g[x] for x in src)
                j = index.get(t)
                if j is None:
                    j = len(elements)
                    if j >= size_cap:
                        raise MonoidTooLargeError(
                            f"transition monoid exceeds cap of {size_cap} elements"
                        )
                    index[t] = j
                    elements.append(t)
                    witness.append(witness[head] + (a,))
                row.append(j)
            right.append(row)
            head += 1

        self.dfa = dfa
        self.n = n
        self.alphabet = dfa.alphabet
        self.k = dfa.k
        self.elements = elements
        self.index = index
        self.witness = witness
        self.gen_of = tuple(index[g] for g in gens)
        self.right_cayley = right
        self.left_cayley = [
            [index[tuple(e[x] for x in g)] for g in gens] for e in elements
        ]

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        """Element index of the product (i acts first, then j)."""
        return self.index[compose(self.elements[i], self.elements[j])]

    def element_of_word(self, w: tuple[int, ...]) -> int:
        e = 0
        for a in w:
            e = self.right_cayley[e][a]
        return e

    def witness_names(self, e: int) -> str:
        return "".join(self.alphabet[a] for a in self.witness[e])

    def constants(self) -> list[int]:
        return [i for i, t in enumerate(self.elements) if is_constant(t)]

    def idempotents(self) -> list[int]:
        return [i for i in range(len(self.elements)) if self.mul(i, i) == i]

    def dump_lines(self) -> list[str]:
        """Golden-test dump: ``index<TAB>witness<TAB>image-vector`` per element."""
        return [
            f"{i}\t{self.witness_names(i)}\t{','.join(map(str, t))}"
            for i, t in enumerate(self.elements)
        ]


def transition_monoid(dfa: Dfa, size_cap: int = DEFAULT_SIZE_CAP) -> Monoid:
    """Enumerate the transformations induced by all words over the alphabet."""
    return Monoid(dfa, size_cap=size_cap)


@dataclass(frozen=True)
class Subsemigroup:
    """A product-closed subset of a monoid's elements."""

    members: frozenset[int]


def subsemigroup(m: Monoid, members: frozenset[int] | set[int]) -> Subsemigroup:
    members = frozenset(members)
    if not members:
        raise SyncgameError("subsemigroup must be nonempty")
    for i in members:
        for j in members:
            if m.mul(i, j) not in members:
                raise SyncgameError(
                    f"subset not closed: {i} * {j} = {m.mul(i, j)} escapes"
                )
    return Subsemigroup(members)


def idempotent_power(m: Monoid, e: int) -> int:
    """The unique idempotent among the powers of e."""
    seen: dict[int, int] = {}
    x = e
    steps = 1
    while x not in seen:
        seen[x] = steps
        x = m.mul(x, e)
        steps += 1
    start = seen[x]  # power where the cycle re-enters
    period = steps - start
    t = start if start % period == 0 else start + (period - start % period)
    # walk to e**t
    y = e
    for _ in range(t - 1):
        y = m.mul(y, e)
    return y


def kernel(m: Monoid, within: Subsemigroup | None = None) -> Subsemigroup:
    """Least two-sided ideal of the monoid (or of a closed subset).

    The product of all members, in any order, lies in every ideal, so the
    kernel is its principal two-sided ideal: the closure of that product
    under multiplication by members on both sides.
    """
    if within is None:
        members = range(len(m.elements))
    else:
        members = sorted(within.members)
    p = None
    for i in members:
        p = i if p is None else m.mul(p, i)
    assert p is not None
    ker = {p}
    frontier = [p]
    while frontier:
        x = frontier.pop()
        for s in members:
            for y in (m.mul(x, s), m.mul(s, x)):
                if y not in ker:
                    ker.add(y)
                    frontier.append(y)
    return Subsemigroup(frozenset(ker))
