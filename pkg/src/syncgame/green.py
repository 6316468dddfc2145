"""Green's relations on an enumerated monoid, regularity, and DS membership.

R-classes are the strongly connected components of the right Cayley graph
and L-classes those of the left Cayley graph; because the monoid contains
the identity, mutual reachability coincides with mutual divisibility.
D is the least equivalence containing both, obtained by merging every
R-class and L-class in a union-find.

An element is regular (a = asa for some s) exactly when its R-class
contains an idempotent: from a = asa, the product as is an idempotent in
the R-class of a; conversely a left identity e of R_a writes a = (ax)a.
Tests cross-check this against the definitional scan on small monoids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monoid import Monoid
from .util import UnionFind, tarjan_scc


@dataclass(frozen=True)
class GreenStructure:
    r_class_of: tuple[int, ...]
    l_class_of: tuple[int, ...]
    d_class_of: tuple[int, ...]
    regular_element: tuple[bool, ...]
    regular_d_class: tuple[bool, ...]
    n_r: int
    n_l: int
    n_d: int


@dataclass(frozen=True)
class DsVerdict:
    """DS membership with a concrete counterexample when it fails.

    ``witness = (a, b, d)`` means a and b lie in the regular D-class d
    while their product ab does not.
    """

    in_ds: bool
    witness: tuple[int, int, int] | None


def green_relations(m: Monoid) -> GreenStructure:
    size = len(m)
    right = m.right_cayley
    left = m.left_cayley
    r_of = tarjan_scc(size, lambda e: iter(right[e]))
    l_of = tarjan_scc(size, lambda e: iter(left[e]))

    uf = UnionFind(size)
    r_seen: dict[int, int] = {}
    l_seen: dict[int, int] = {}
    for e in range(size):
        r = r_of[e]
        if r in r_seen:
            uf.union(r_seen[r], e)
        else:
            r_seen[r] = e
        l = l_of[e]
        if l in l_seen:
            uf.union(l_seen[l], e)
        else:
            l_seen[l] = e
    d_of = uf.class_ids()

    n_r = max(r_of) + 1
    n_d = max(d_of) + 1
    r_has_idem = [False] * n_r
    for e in m.idempotents():
        r_has_idem[r_of[e]] = True
    regular = [r_has_idem[r_of[e]] for e in range(size)]
    reg_d = [False] * n_d
    for e in range(size):
        if regular[e]:
            reg_d[d_of[e]] = True

    return GreenStructure(
        r_class_of=tuple(r_of),
        l_class_of=tuple(l_of),
        d_class_of=tuple(d_of),
        regular_element=tuple(regular),
        regular_d_class=tuple(reg_d),
        n_r=n_r,
        n_l=max(l_of) + 1,
        n_d=n_d,
    )


def is_in_ds(m: Monoid, gs: GreenStructure) -> DsVerdict:
    """Check that every regular D-class is closed under the product.

    For a D b in a finite semigroup, ab stays in the class iff the
    H-class (L-class of a) ∩ (R-class of b) contains an idempotent, so a
    regular D-class is a subsemigroup exactly when each of its R×L cells
    holds an idempotent. A cell without one yields a violating pair.
    """
    size = len(m)
    idem_cells = set()
    for e in m.idempotents():
        idem_cells.add((gs.r_class_of[e], gs.l_class_of[e]))

    by_d: dict[int, list[int]] = {}
    for e in range(size):
        by_d.setdefault(gs.d_class_of[e], []).append(e)

    for d in sorted(by_d):
        if not gs.regular_d_class[d]:
            continue
        members = by_d[d]
        least_of_r: dict[int, int] = {}
        least_of_l: dict[int, int] = {}
        for e in members:
            least_of_r.setdefault(gs.r_class_of[e], e)
            least_of_l.setdefault(gs.l_class_of[e], e)
        for r in sorted(least_of_r):
            for l in sorted(least_of_l):
                if (r, l) not in idem_cells:
                    a = least_of_l[l]
                    b = least_of_r[r]
                    ab = m.mul(a, b)
                    assert gs.d_class_of[ab] != d, "cell criterion disagrees with product"
                    return DsVerdict(in_ds=False, witness=(a, b, d))
    return DsVerdict(in_ds=True, witness=None)


def is_r_trivial(m: Monoid, gs: GreenStructure) -> bool:
    return gs.n_r == len(m)


def is_commutative(m: Monoid) -> bool:
    """Generators generate, so checking generator pairs suffices."""
    for i in m.gen_of:
        for j in m.gen_of:
            if m.mul(i, j) != m.mul(j, i):
                return False
    return True
