import pytest

from syncgame.automata import Dfa, builtin
from syncgame.errors import NotDsError
from syncgame.green import green_relations, is_in_ds
from syncgame.monoid import is_constant, kernel, transition_monoid
from syncgame.semilattice import (
    _congruence_closure,
    component_of_transformation,
    decompose,
    least_semilattice_congruence,
)

from conftest import (
    CATALOG_DFAS,
    CATALOG_IDS,
    COMMUTATIVE3,
    TWO_CONST_ID,
    naive_semilattice_congruence,
)


def partition(ids):
    groups = {}
    for e, c in enumerate(ids):
        groups.setdefault(c, set()).add(e)
    return frozenset(frozenset(g) for g in groups.values())


def ds_catalog():
    out = []
    for name, dfa in zip(CATALOG_IDS, CATALOG_DFAS):
        m = transition_monoid(dfa)
        if is_in_ds(m, green_relations(m)).in_ds:
            out.append((name, m))
    return out


DS_MONOIDS = ds_catalog()


def test_two_state_congruence_is_identity():
    m = transition_monoid(TWO_CONST_ID)
    comp = least_semilattice_congruence(m)
    assert partition(comp) == frozenset([frozenset({0}), frozenset({1})])


def test_trivial_monoid_single_class():
    m = transition_monoid(Dfa(1, ("a",), ((0,),)))
    assert least_semilattice_congruence(m) == [0]


def test_definite_dfa_splits_identity_from_nilpotent_part():
    from conftest import DEFINITE2

    m = transition_monoid(DEFINITE2)
    comp = least_semilattice_congruence(m)
    assert partition(comp) == frozenset(
        [frozenset({0}), frozenset(set(range(1, len(m))))]
    )


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_generator_seeding_matches_full_seeding(name, m):
    assert partition(least_semilattice_congruence(m)) == partition(
        naive_semilattice_congruence(m)
    )


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_congruence_minimality_by_seed_removal(name, m):
    """Dropping any one full seed either changes nothing or breaks a law.

    Any strictly finer candidate misses some seed pair (u, v); its quotient
    then violates idempotency (u = x*x, v = x) or commutativity, so no
    finer semilattice congruence exists.
    """
    if len(m) > 30:
        pytest.skip("exponential oracle; small monoids only")
    size = len(m)
    seeds = [(m.mul(x, x), x) for x in range(size)]
    seeds += [(m.mul(x, y), m.mul(y, x)) for x in range(size) for y in range(size)]
    reference = _congruence_closure(m, seeds)
    for drop in range(len(seeds)):
        u, v = seeds[drop]
        if u == v:
            continue
        comp = _congruence_closure(m, seeds[:drop] + seeds[drop + 1 :])
        if partition(comp) == partition(reference):
            continue
        # the dropped pair must stay unmerged, breaking a semilattice law
        assert comp[u] != comp[v]


def test_two_state_decomposition_values():
    m = transition_monoid(TWO_CONST_ID)
    d = decompose(m)
    const = m.index[(0, 0)]
    assert d.n_components == 2
    assert d.z == d.component_of[const]
    assert d.s_z == frozenset({const})
    assert d.kernel_z == frozenset({const})
    assert d.m == 1 and d.m_witness is None
    assert d.height == 2
    assert d.letter_component[0] == d.z  # letter a is the constant
    assert d.letter_component[1] == d.component_of[0]  # letter b is the identity


def test_non_ds_monoid_errors_with_witness():
    m = transition_monoid(builtin("paper_example"))
    assert not is_in_ds(m, green_relations(m)).in_ds
    with pytest.raises(NotDsError) as err:
        decompose(m)
    a, b, d = err.value.witness
    gs = green_relations(m)
    assert gs.d_class_of[m.mul(a, b)] != d


def test_commutative_sync_constants_in_least_component():
    m = transition_monoid(COMMUTATIVE3)
    d = decompose(m)
    for e, t in enumerate(m.elements):
        if is_constant(t):
            assert d.component_of[e] == d.z


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_quotient_laws(name, m):
    d = decompose(m)
    for x in range(d.n_components):
        assert d.y_product[x][x] == x
        for y in range(d.n_components):
            assert d.y_product[x][y] == d.y_product[y][x]
            xy = d.y_product[x][y]
            assert d.leq(xy, x) and d.leq(xy, y)


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_components_satisfy_s1_s2_s3(name, m):
    d = decompose(m)
    size = len(m)
    assert sorted(set(d.component_of)) == list(range(d.n_components))  # S1 partition
    for x in range(size):
        for y in range(size):
            assert (
                d.component_of[m.mul(x, y)]
                == d.y_product[d.component_of[x]][d.component_of[y]]
            )  # S3, and S2 with idempotency


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_least_component_and_kernels(name, m):
    d = decompose(m)
    for y in range(d.n_components):
        assert d.y_product[d.z][y] == d.z
        assert d.y_product[y][d.z] == d.z
    ker = kernel(m).members
    assert ker <= d.s_z
    assert d.kernel_z <= ker
    assert d.kernel_equality_observed == (d.kernel_z == ker)


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_nilpotency_index_exact(name, m):
    d = decompose(m)
    # all products of d.m factors from S_z land in the kernel of S_z
    level = set(d.s_z)
    for _ in range(d.m - 1):
        level = {m.mul(p, s) for p in level for s in d.s_z}
    assert level <= d.kernel_z
    if d.m > 1:
        assert d.m_witness is not None
        shorter = set(d.s_z)
        for _ in range(d.m - 2):
            shorter = {m.mul(p, s) for p in shorter for s in d.s_z}
        assert d.m_witness in shorter and d.m_witness not in d.kernel_z
    else:
        assert d.m_witness is None


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_component_lookup(name, m):
    d = decompose(m)
    for e in kernel(m).members:
        assert component_of_transformation(d, e) == d.z
    for a, g in enumerate(m.gen_of):
        assert component_of_transformation(d, g) == d.letter_component[a]
    assert component_of_transformation(d, 0) == d.component_of[0]


@pytest.mark.parametrize("name,m", DS_MONOIDS, ids=[n for n, _ in DS_MONOIDS])
def test_height_is_longest_strict_chain(name, m):
    d = decompose(m)
    # brute-force longest strictly decreasing chain by DFS over components
    def longest_from(y):
        below = [x for x in range(d.n_components) if x != y and d.leq(x, y)]
        return 1 + max((longest_from(x) for x in below), default=0)

    assert d.height == max(longest_from(y) for y in range(d.n_components))
