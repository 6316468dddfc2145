"""Synchronization predicates, shortest reset words, DFA family classifiers.

Two independent synchronization checks are kept on purpose: the pair
merging closure below works directly on the automaton, while
``is_synchronizing_via_kernel`` goes through the transition monoid
(kernel all constant). They serve as mutual oracles for each other.
"""

from __future__ import annotations

from collections import deque

from .automata import Dfa, Word, full_mask, image
from .errors import CapExceededError
from .monoid import Monoid, compose, is_constant
from .util import popcount, tarjan_scc

RESET_BFS_CAP = 24


def _unmergeable_pair(dfa: Dfa) -> tuple[int, int] | None:
    """Backward closure on the pair graph from immediately merged pairs.

    Returns None when every unordered state pair can be merged by some
    word (the automaton is then synchronizing), otherwise one stuck pair.
    """
    n = dfa.n
    if n == 1:
        return None
    pair_id = {}
    pairs = []
    for p in range(n):
        for q in range(p + 1, n):
            pair_id[(p, q)] = len(pairs)
            pairs.append((p, q))
    rev: list[list[int]] = [[] for _ in pairs]
    mergeable = [False] * len(pairs)
    queue: deque[int] = deque()
    for i, (p, q) in enumerate(pairs):
        for row in dfa.delta:
            tp, tq = row[p], row[q]
            if tp == tq:
                if not mergeable[i]:
                    mergeable[i] = True
                    queue.append(i)
            else:
                if tp > tq:
                    tp, tq = tq, tp
                rev[pair_id[(tp, tq)]].append(i)
    while queue:
        j = queue.popleft()
        for i in rev[j]:
            if not mergeable[i]:
                mergeable[i] = True
                queue.append(i)
    for i, ok in enumerate(mergeable):
        if not ok:
            return pairs[i]
    return None


def is_synchronizing(dfa: Dfa) -> bool:
    return _unmergeable_pair(dfa) is None


def is_synchronizing_via_kernel(m: Monoid) -> bool:
    """Monoid route: kernel consists of constant transformations."""
    from .monoid import kernel

    return all(is_constant(m.elements[e]) for e in kernel(m).members)


def shortest_reset_word(dfa: Dfa, cap: int = RESET_BFS_CAP) -> Word | None:
    """Lexicographically least among the shortest reset words, if any.

    Breadth-first search on the power automaton from the full state set.
    Expanding letters in alphabet order from a FIFO queue discovers every
    subset with its lex-least shortest word, so the first singleton found
    yields the lex-least shortest reset word overall.
    """
    if dfa.n > cap:
        raise CapExceededError(f"reset-word search capped at {cap} states, got {dfa.n}")
    start = full_mask(dfa.n)
    if popcount(start) == 1:
        return ()
    parent: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue: deque[int] = deque([start])
    k = dfa.k
    while queue:
        s = queue.popleft()
        for a in range(k):
            t = image(dfa, s, (a,))
            if t in parent:
                continue
            parent[t] = (s, a)
            if popcount(t) == 1:
                w = []
                cur = t
                while cur != start:
                    cur, a2 = parent[cur]
                    w.append(a2)
                return tuple(reversed(w))
            queue.append(t)
    return None


def definite_degree(dfa: Dfa) -> int | None:
    """Least k such that every length-k word resets the automaton, or None.

    Iterates the level sets T_j of transformations of words of length
    exactly j. The iteration is deterministic on subsets of a finite set,
    so it either reaches an all-constant level or revisits a level and
    can never reset; exact repeat detection decides which.
    """
    gens = [tuple(row) for row in dfa.delta]
    level = frozenset(gens)
    seen = set()
    j = 1
    while level not in seen:
        if all(is_constant(t) for t in level):
            return j
        seen.add(level)
        level = frozenset(compose(s, g) for s in level for g in gens)
        j += 1
    return None


def is_weakly_acyclic(dfa: Dfa) -> bool:
    """Reachability is a partial order: every state SCC is a singleton."""
    succ = [[row[q] for row in dfa.delta] for q in range(dfa.n)]
    comp = tarjan_scc(dfa.n, lambda q: iter(succ[q]))
    return len(set(comp)) == dfa.n
