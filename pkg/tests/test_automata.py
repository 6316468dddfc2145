import pytest

from syncgame.automata import (
    Dfa,
    apply,
    builtin,
    full_mask,
    image,
    mask_of,
    parse_dfa,
    serialize_dfa,
    states_of,
    to_dot,
)
from syncgame.errors import AutomatonFormatError
from syncgame.util import SplitMix64, popcount

from conftest import CATALOG_DFAS, CATALOG_IDS

PAPER_JSON = '{"states":3,"alphabet":["a","b"],"delta":{"a":[0,0,2],"b":[0,2,1]}}'


def test_parse_paper_example():
    dfa = parse_dfa(PAPER_JSON)
    assert dfa == builtin("paper_example")


def test_parse_one_state():
    dfa = parse_dfa('{"states":1,"alphabet":["a"],"delta":{"a":[0]}}')
    assert dfa.n == 1 and dfa.alphabet == ("a",)


@pytest.mark.parametrize(
    "text",
    [
        '{"states":2,"alphabet":["a"],"delta":{"a":[0,2]}}',  # target out of range
        '{"states":0,"alphabet":["a"],"delta":{"a":[]}}',  # no states
        '{"states":2,"alphabet":["a","a"],"delta":{"a":[0,0]}}',  # dup letters
        '{"states":2,"alphabet":["a"],"delta":{"b":[0,0]}}',  # wrong delta keys
        '{"states":2,"alphabet":["a"],"delta":{"a":[0]}}',  # non-total
        '{"states":2,"alphabet":["a"],"delta":{"a":[0,0],"b":[0,0]}}',  # extra key
        "not json",
        "[1,2]",
        '{"states":2,"alphabet":[]}',
    ],
)
def test_parse_rejects(text):
    with pytest.raises(AutomatonFormatError):
        parse_dfa(text)


@pytest.mark.parametrize("dfa", CATALOG_DFAS, ids=CATALOG_IDS)
def test_serialize_round_trip(dfa):
    assert parse_dfa(serialize_dfa(dfa)) == dfa


def test_apply_examples():
    paper = builtin("paper_example")
    assert apply(paper, 1, paper.word("a")) == 0
    assert apply(paper, 2, ()) == 2
    brandt = builtin("brandt_minimal")
    assert apply(brandt, 1, brandt.word("aa")) == 0


@pytest.mark.parametrize("dfa", CATALOG_DFAS, ids=CATALOG_IDS)
def test_apply_is_action(dfa):
    rng = SplitMix64(99)
    for _ in range(20):
        u = tuple(rng.below(dfa.k) for _ in range(rng.below(5)))
        v = tuple(rng.below(dfa.k) for _ in range(rng.below(5)))
        for q in range(dfa.n):
            assert apply(dfa, q, u + v) == apply(dfa, apply(dfa, q, u), v)


def test_image_examples():
    paper = builtin("paper_example")
    assert image(paper, full_mask(3), paper.word("a")) == mask_of([0, 2])
    assert image(paper, mask_of([1]), paper.word("ba")) == mask_of(
        [apply(paper, 1, paper.word("ba"))]
    )
    brandt = builtin("brandt_minimal")
    assert states_of(image(brandt, full_mask(3), brandt.word("ab"))) == [0, 1]


@pytest.mark.parametrize("dfa", CATALOG_DFAS, ids=CATALOG_IDS)
def test_image_monotone_and_composes(dfa):
    rng = SplitMix64(7)
    for _ in range(20):
        s = rng.below(full_mask(dfa.n)) + 1
        u = tuple(rng.below(dfa.k) for _ in range(rng.below(4)))
        v = tuple(rng.below(dfa.k) for _ in range(rng.below(4)))
        assert popcount(image(dfa, s, u)) <= popcount(s)
        assert image(dfa, image(dfa, s, u), v) == image(dfa, s, u + v)


def test_builtin_brandt_table():
    brandt = builtin("brandt_minimal")
    assert brandt.delta == ((0, 2, 0), (0, 0, 1))


def test_builtin_cerny_table():
    assert builtin("cerny", [3]).delta == ((1, 2, 0), (1, 1, 2))


def test_builtin_random_deterministic():
    assert builtin("random", [3, 2, 7]) == builtin("random", [3, 2, 7])
    assert builtin("random", [3, 2, 7]) != builtin("random", [3, 2, 8])


@pytest.mark.parametrize(
    "name,params",
    [("nope", []), ("cerny", []), ("cerny", [1]), ("random", [3]), ("paper_example", [1])],
)
def test_builtin_rejects(name, params):
    with pytest.raises(AutomatonFormatError):
        builtin(name, params)


def test_to_dot_token_fill():
    paper = builtin("paper_example")
    all_gray = to_dot(paper, tokens=full_mask(3))
    assert all_gray.count("fillcolor=gray") == 3
    one = to_dot(paper, tokens=mask_of([0]))
    assert one.count("fillcolor=gray") == 1
    none = to_dot(paper)
    assert "fillcolor" not in none
    assert 'label="a,b"' in none  # parallel loop edges merged
