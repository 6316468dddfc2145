"""Shared fixtures: a catalog of small automata and independent oracles.

The oracle functions here recompute module results from definitions only
(brute force over products, words, or subsets) so the fast implementations
are checked against something that cannot share their shortcuts.
"""

from __future__ import annotations

import itertools

import pytest

from syncgame.automata import Dfa, builtin, full_mask, image
from syncgame.monoid import Monoid, compose, identity_map, is_constant
from syncgame.util import popcount

PAPER = builtin("paper_example")
BRANDT = builtin("brandt_minimal")
CERNY3 = builtin("cerny", [3])
TWO_CONST_ID = Dfa(2, ("a", "b"), ((0, 0), (0, 1)))
TWO_ID_ONLY = Dfa(2, ("a",), ((0, 1),))
COMMUTATIVE3 = Dfa(3, ("a", "b"), ((1, 2, 2), (2, 2, 2)))
ID_AND_CONST3 = Dfa(3, ("a", "b"), ((0, 1, 2), (0, 0, 0)))
ALL_CONST2 = Dfa(2, ("a", "b"), ((1, 1), (1, 1)))
DEFINITE2 = Dfa(3, ("a",), ((1, 2, 2),))
CHAIN3 = Dfa(3, ("a", "b"), ((1, 2, 2), (0, 1, 2)))
ONE_STATE = Dfa(1, ("a",), ((0,),))

CATALOG = [
    ("paper_example", PAPER),
    ("brandt_minimal", BRANDT),
    ("cerny3", CERNY3),
    ("two_const_id", TWO_CONST_ID),
    ("two_id_only", TWO_ID_ONLY),
    ("commutative3", COMMUTATIVE3),
    ("id_and_const3", ID_AND_CONST3),
    ("all_const2", ALL_CONST2),
    ("definite2", DEFINITE2),
    ("chain3", CHAIN3),
    ("one_state", ONE_STATE),
    ("random_4_2_3", builtin("random", [4, 2, 3])),
    ("random_4_2_11", builtin("random", [4, 2, 11])),
    ("random_3_3_5", builtin("random", [3, 3, 5])),
]

CATALOG_IDS = [name for name, _ in CATALOG]
CATALOG_DFAS = [dfa for _, dfa in CATALOG]


@pytest.fixture(params=CATALOG_DFAS, ids=CATALOG_IDS)
def catalog_dfa(request):
    return request.param


# ---------------------------------------------------------------- oracles


def enumerate_monoid_elements(dfa: Dfa) -> set[tuple[int, ...]]:
    """Definitional closure: all word transformations, no witness logic."""
    gens = [tuple(row) for row in dfa.delta]
    elements = {identity_map(dfa.n)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                t = compose(e, g)
                if t not in elements:
                    elements.add(t)
                    nxt.append(t)
        frontier = nxt
    return elements


def words_shortlex(k: int, max_len: int):
    for length in range(max_len + 1):
        yield from itertools.product(range(k), repeat=length)


def brute_force_reset_words(dfa: Dfa, max_len: int) -> list[tuple[int, ...]]:
    """All reset words up to max_len, in shortlex order."""
    start = full_mask(dfa.n)
    out = []
    for w in words_shortlex(dfa.k, max_len):
        if popcount(image(dfa, start, w)) == 1:
            out.append(w)
    return out


def naive_r_related(m: Monoid, a: int, b: int) -> bool:
    if a == b:
        return True
    a_right = {m.mul(a, s) for s in range(len(m))}
    b_right = {m.mul(b, s) for s in range(len(m))}
    return a in b_right and b in a_right


def naive_l_related(m: Monoid, a: int, b: int) -> bool:
    if a == b:
        return True
    a_left = {m.mul(s, a) for s in range(len(m))}
    b_left = {m.mul(s, b) for s in range(len(m))}
    return a in b_left and b in a_left


def naive_green_classes(m: Monoid):
    """R, L, D partitions straight from mutual divisibility."""
    size = len(m)
    r_of = [-1] * size
    l_of = [-1] * size
    for a in range(size):
        if r_of[a] == -1:
            cls = max(r_of) + 1
            for b in range(a, size):
                if r_of[b] == -1 and naive_r_related(m, a, b):
                    r_of[b] = cls
        if l_of[a] == -1:
            cls = max(l_of) + 1
            for b in range(a, size):
                if l_of[b] == -1 and naive_l_related(m, a, b):
                    l_of[b] = cls
    # D as transitive closure of R union L
    d_of = list(range(size))

    def find(x):
        while d_of[x] != x:
            d_of[x] = d_of[d_of[x]]
            x = d_of[x]
        return x

    for a in range(size):
        for b in range(size):
            if r_of[a] == r_of[b] or l_of[a] == l_of[b]:
                d_of[find(a)] = find(b)
    dense = {}
    d_ids = []
    for x in range(size):
        root = find(x)
        if root not in dense:
            dense[root] = len(dense)
        d_ids.append(dense[root])
    return r_of, l_of, d_ids


def naive_regular(m: Monoid, a: int) -> bool:
    """The definitional scan: asa = a for some s."""
    return any(m.mul(m.mul(a, s), a) == a for s in range(len(m)))


def naive_in_ds(m: Monoid) -> bool:
    """Definition: products of pairs inside a regular D-class stay inside."""
    _, _, d_of = naive_green_classes(m)
    size = len(m)
    regular_d = {d_of[a] for a in range(size) if naive_regular(m, a)}
    for a in range(size):
        for b in range(size):
            if d_of[a] == d_of[b] and d_of[a] in regular_d:
                if d_of[m.mul(a, b)] != d_of[a]:
                    return False
    return True


def naive_kernel(m: Monoid, members=None) -> frozenset[int]:
    """Intersection of all principal two-sided ideals."""
    if members is None:
        members = list(range(len(m)))
    members = list(members)
    ideals = []
    for e in members:
        ideal = {m.mul(m.mul(s, e), t) for s in members for t in members}
        ideal |= {m.mul(s, e) for s in members}
        ideal |= {m.mul(e, t) for t in members}
        ideal.add(e)
        ideals.append(ideal)
    ker = set.intersection(*ideals)
    return frozenset(ker)


def naive_semilattice_congruence(m: Monoid) -> list[int]:
    """Closure of the full seed set {(xx, x), (xy, yx) for all x, y}."""
    from syncgame.semilattice import _congruence_closure

    size = len(m)
    seeds = [(m.mul(x, x), x) for x in range(size)]
    seeds += [
        (m.mul(x, y), m.mul(y, x)) for x in range(size) for y in range(size)
    ]
    return _congruence_closure(m, seeds)


def forward_alice_win_set(dfa: Dfa) -> set[tuple[int, str]]:
    """Attractor by forward fixpoint iteration, no distance bookkeeping."""
    n = dfa.n
    masks = range(1, 1 << n)
    won = {(mk, t) for mk in masks if popcount(mk) == 1 for t in ("alice", "bob")}
    changed = True
    while changed:
        changed = False
        for mk in masks:
            if popcount(mk) == 1:
                continue
            succ = [image(dfa, mk, (a,)) for a in range(dfa.k)]
            if (mk, "alice") not in won:
                if any((s, "bob") in won for s in succ):
                    won.add((mk, "alice"))
                    changed = True
            if (mk, "bob") not in won:
                if all((s, "alice") in won for s in succ):
                    won.add((mk, "bob"))
                    changed = True
    return won
