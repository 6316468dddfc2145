"""Least semilattice congruence and the component decomposition it induces.

The least congruence whose quotient is commutative and idempotent is the
congruence closure of the pairs (g*g, g) and (g*h, h*g) over generators:
any semilattice congruence must merge those pairs, and the quotient of
their closure already satisfies both laws on all elements because the
generator images generate it. Tests cross-check against closure of the
full pair set {(x*x, x), (x*y, y*x) : all x, y}.

For monoids whose regular D-classes are subsemigroups, the components
form a semilattice of semigroups: component products respect the
congruence, the order x <= y defined by xy = x has a least component z,
S_z is an ideal containing the monoid kernel, and S_z is nilpotent over
its own kernel. ``decompose`` computes and verifies all of that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDsError, SyncgameError
from .green import GreenStructure, green_relations, is_in_ds
from .monoid import Monoid, Subsemigroup, kernel, subsemigroup
from .util import UnionFind


def _congruence_closure(m: Monoid, seeds: list[tuple[int, int]]) -> list[int]:
    """Least congruence merging the seed pairs; returns dense class ids."""
    size = len(m)
    uf = UnionFind(size)
    work: list[tuple[int, int]] = []

    def merge(x: int, y: int) -> None:
        if uf.union(x, y):
            work.append((x, y))

    for x, y in seeds:
        merge(x, y)
    while work:
        u, v = work.pop()
        for s in range(size):
            merge(m.mul(s, u), m.mul(s, v))
            merge(m.mul(u, s), m.mul(v, s))
    return uf.class_ids()


def least_semilattice_congruence(m: Monoid) -> list[int]:
    """Element -> component id under the least semilattice congruence."""
    seeds = []
    for g in m.gen_of:
        seeds.append((m.mul(g, g), g))
    for g in m.gen_of:
        for h in m.gen_of:
            seeds.append((m.mul(g, h), m.mul(h, g)))
    return _congruence_closure(m, seeds)


@dataclass(frozen=True)
class SemilatticeDecomposition:
    """Components of a DS monoid with the derived order data.

    height counts the number of elements in the longest strictly
    decreasing chain of components, so a two-element chain has height 2.
    """

    component_of: tuple[int, ...]
    n_components: int
    y_product: tuple[tuple[int, ...], ...]
    y_leq: tuple[tuple[bool, ...], ...]
    z: int
    s_z: frozenset[int]
    kernel_z: frozenset[int]
    m: int
    m_witness: int | None
    height: int
    letter_component: tuple[int, ...]
    kernel_equality_observed: bool

    def leq(self, x: int, y: int) -> bool:
        return self.y_leq[x][y]


def component_of_transformation(d: SemilatticeDecomposition, e: int) -> int:
    return d.component_of[e]


def decompose(m: Monoid, gs: GreenStructure | None = None) -> SemilatticeDecomposition:
    """Full decomposition record; requires DS membership and verifies it.

    Raises NotDsError if the monoid is not in DS. Any later verification
    failure would contradict the decomposition theorem for DS monoids and
    aborts loudly as an implementation bug.
    """
    if gs is None:
        gs = green_relations(m)
    verdict = is_in_ds(m, gs)
    if not verdict.in_ds:
        raise NotDsError(verdict.witness)

    size = len(m)
    comp = least_semilattice_congruence(m)
    n_comp = max(comp) + 1
    reps = [-1] * n_comp
    for e in range(size):
        if reps[comp[e]] == -1:
            reps[comp[e]] = e

    y_product = [
        [comp[m.mul(reps[x], reps[y])] for y in range(n_comp)] for x in range(n_comp)
    ]
    # One pass verifies the congruence property and (S3); with the quotient
    # laws below it also gives (S2). (S1) holds because comp is a partition.
    for x in range(size):
        cx = comp[x]
        for y in range(size):
            if comp[m.mul(x, y)] != y_product[cx][comp[y]]:
                raise SyncgameError(
                    "semilattice verification failed: component product "
                    f"not well defined at elements {x}, {y}"
                )
    for x in range(n_comp):
        if y_product[x][x] != x:
            raise SyncgameError(f"semilattice verification failed: component {x} not idempotent")
        for y in range(n_comp):
            if y_product[x][y] != y_product[y][x]:
                raise SyncgameError(
                    f"semilattice verification failed: components {x}, {y} do not commute"
                )

    y_leq = [[y_product[x][y] == x for y in range(n_comp)] for x in range(n_comp)]
    z = 0
    for y in range(1, n_comp):
        z = y_product[z][y]
    for y in range(n_comp):
        if y_product[z][y] != z:
            raise SyncgameError("semilattice verification failed: no least component")

    s_z = frozenset(e for e in range(size) if comp[e] == z)
    sub_z = subsemigroup(m, s_z)
    ker_z = kernel(m, within=sub_z).members
    ker_s = kernel(m).members
    if not ker_s <= s_z:
        raise SyncgameError("semilattice verification failed: kernel escapes least component")
    if not ker_z <= ker_s:
        raise SyncgameError("semilattice verification failed: Ker S_z not inside Ker S")

    # Nilpotency index of S_z over its kernel: products of exactly j
    # elements, iterated until they all land in the kernel.
    level = set(s_z)
    nilp = 1
    witness = None
    while not level <= ker_z:
        witness = min(level - ker_z)
        level = {m.mul(p, s) for p in level for s in s_z}
        nilp += 1
        if nilp > len(s_z) + 1:
            raise SyncgameError("semilattice verification failed: nilpotency index diverges")

    strictly_below = [
        [x for x in range(n_comp) if x != y and y_leq[x][y]] for y in range(n_comp)
    ]
    chain = [0] * n_comp

    def chain_len(y: int) -> int:
        if chain[y] == 0:
            chain[y] = 1 + max((chain_len(x) for x in strictly_below[y]), default=0)
        return chain[y]

    height = max(chain_len(y) for y in range(n_comp))

    return SemilatticeDecomposition(
        component_of=tuple(comp),
        n_components=n_comp,
        y_product=tuple(tuple(r) for r in y_product),
        y_leq=tuple(tuple(r) for r in y_leq),
        z=z,
        s_z=s_z,
        kernel_z=frozenset(ker_z),
        m=nilp,
        m_witness=witness,
        height=height,
        letter_component=tuple(comp[g] for g in m.gen_of),
        kernel_equality_observed=frozenset(ker_z) == frozenset(ker_s),
    )
