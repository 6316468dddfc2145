import json

import pytest
from fastapi.testclient import TestClient

from syncgame.automata import builtin, serialize_dfa
from syncgame.service.app import create_app

BRANDT = json.loads(serialize_dfa(builtin("brandt_minimal")))
PAPER = json.loads(serialize_dfa(builtin("paper_example")))
TWO = {"states": 2, "alphabet": ["a", "b"], "delta": {"a": [0, 0], "b": [0, 1]}}


@pytest.fixture()
def client():
    return TestClient(create_app())


def post_automaton(client, doc):
    r = client.post("/automata", json=doc)
    assert r.status_code == 200, r.text
    return r.json()["id"]


def test_automaton_round_trip(client):
    aid = post_automaton(client, BRANDT)
    assert client.get(f"/automata/{aid}").json() == BRANDT


def test_invalid_automaton_rejected(client):
    r = client.post(
        "/automata",
        json={"states": 2, "alphabet": ["a"], "delta": {"a": [0, 2]}},
    )
    assert r.status_code == 400
    body = r.json()
    assert body["code"] == "invalid_automaton" and "message" in body


def test_unknown_ids_404(client):
    assert client.get("/automata/zzz/analysis").status_code == 404
    assert client.get("/games/zzz").status_code == 404
    body = client.get("/games/zzz").json()
    assert body["code"] == "game_not_found"


def test_analysis_endpoint(client):
    aid = post_automaton(client, BRANDT)
    doc = client.get(f"/automata/{aid}/analysis").json()
    assert doc["synchronizing"] is True
    assert doc["reset_length"] == 2
    assert doc["in_ds"] is False
    assert doc["a_automaton"] is True
    paper_id = post_automaton(client, PAPER)
    paper_doc = client.get(f"/automata/{paper_id}/analysis").json()
    assert paper_doc["a_automaton"] is False and paper_doc["reset_length"] == 3


def test_solution_endpoint(client):
    aid = post_automaton(client, BRANDT)
    sol = client.get(f"/automata/{aid}/solution").json()
    assert sol == {"winner": "alice", "dist": 3, "pv": ["a", "b", "b"]}
    pid = post_automaton(client, PAPER)
    assert client.get(f"/automata/{pid}/solution").json()["winner"] == "bob"


def test_game_brandt_bob_replies_b(client):
    aid = post_automaton(client, BRANDT)
    r = client.post("/games", json={"automaton_id": aid, "human_side": "bob"})
    assert r.status_code == 200
    state = r.json()["position"]
    gid = r.json()["game_id"]
    # engine (the synchronizing side) has opened with "a"
    assert state["history"] == ["a"]
    assert state["tokens"] == [0, 2]
    assert state["turn"] == "bob"
    r = client.post(f"/games/{gid}/moves", json={"letter": "b"})
    state = r.json()
    assert state["history"] == ["a", "b", "b"]
    assert state["tokens"] == [0]
    assert state["status"] == "finished" and state["winner"] == "alice"


def test_game_brandt_bob_replies_a(client):
    aid = post_automaton(client, BRANDT)
    gid = client.post("/games", json={"automaton_id": aid, "human_side": "bob"}).json()[
        "game_id"
    ]
    state = client.post(f"/games/{gid}/moves", json={"letter": "a"}).json()
    assert state["tokens"] == [0]
    assert state["status"] == "finished"
    assert state["history"] == ["a", "a"]


def test_game_paper_mirror_stays_ongoing(client):
    aid = post_automaton(client, PAPER)
    created = client.post("/games", json={"automaton_id": aid, "human_side": "bob"}).json()
    gid = created["game_id"]
    state = created["position"]
    assert state["winner_prediction"] == "bob"
    for _ in range(20):
        engine_letter = state["history"][-1]
        r = client.post(f"/games/{gid}/moves", json={"letter": engine_letter})
        assert r.status_code == 200
        state = r.json()
        assert state["status"] == "ongoing"
        assert len(state["tokens"]) >= 2
        # GET agrees with the move response
        assert client.get(f"/games/{gid}").json() == state


def test_paper_strategy_engine_on_ds_automaton(client):
    aid = post_automaton(client, TWO)
    created = client.post(
        "/games", json={"automaton_id": aid, "human_side": "bob", "engine_kind": "paper"}
    ).json()
    assert created["position"]["engine_kind"] == "paper"
    # engine opened with the first letter, the constant: game over at once
    assert created["position"]["status"] == "finished"


def test_engine_kind_validation(client):
    aid = post_automaton(client, BRANDT)
    r = client.post(
        "/games", json={"automaton_id": aid, "human_side": "bob", "engine_kind": "paper"}
    )
    assert r.status_code == 409
    assert r.json()["code"] == "engine_kind_invalid"
    # paper engine cannot play the non-synchronizing side
    tid = post_automaton(client, TWO)
    r = client.post(
        "/games", json={"automaton_id": tid, "human_side": "alice", "engine_kind": "paper"}
    )
    assert r.status_code == 409


def test_move_validation(client):
    aid = post_automaton(client, PAPER)
    gid = client.post("/games", json={"automaton_id": aid, "human_side": "bob"}).json()[
        "game_id"
    ]
    r = client.post(f"/games/{gid}/moves", json={"letter": "z"})
    assert r.status_code == 409 and r.json()["code"] == "invalid_letter"
    # human is bob; after one legal move the engine replies and it is
    # bob's turn again, so a stream of moves is always legal until the end
    r = client.post(f"/games/{gid}/moves", json={"letter": "a"})
    assert r.status_code == 200


def test_human_alice_vs_optimal_bob(client):
    aid = post_automaton(client, BRANDT)
    created = client.post("/games", json={"automaton_id": aid, "human_side": "alice"}).json()
    gid = created["game_id"]
    assert created["position"]["history"] == []  # human moves first
    state = client.post(f"/games/{gid}/moves", json={"letter": "a"}).json()
    # optimal Bob delays with "b" (a would lose immediately)
    assert state["history"] == ["a", "b"]
    state = client.post(f"/games/{gid}/moves", json={"letter": "b"}).json()
    assert state["status"] == "finished"


def test_not_your_turn_after_finish(client):
    aid = post_automaton(client, BRANDT)
    gid = client.post("/games", json={"automaton_id": aid, "human_side": "bob"}).json()[
        "game_id"
    ]
    client.post(f"/games/{gid}/moves", json={"letter": "a"})
    r = client.post(f"/games/{gid}/moves", json={"letter": "a"})
    assert r.status_code == 409 and r.json()["code"] == "game_finished"


def test_history_replays_to_position(client):
    from syncgame.automata import Dfa, mask_of, parse_dfa
    from syncgame.game import GamePosition, Turn, start_position, step

    aid = post_automaton(client, BRANDT)
    gid = client.post("/games", json={"automaton_id": aid, "human_side": "bob"}).json()[
        "game_id"
    ]
    state = client.post(f"/games/{gid}/moves", json={"letter": "b"}).json()
    dfa = parse_dfa(json.dumps(client.get(f"/automata/{aid}").json()))
    pos = start_position(dfa)
    for name in state["history"]:
        pos = step(dfa, pos, dfa.letter_index(name))
    assert pos.tokens == mask_of(state["tokens"])


def test_one_state_game_finishes_immediately(client):
    aid = post_automaton(client, {"states": 1, "alphabet": ["a"], "delta": {"a": [0]}})
    created = client.post("/games", json={"automaton_id": aid, "human_side": "bob"}).json()
    assert created["position"]["status"] == "finished"
    assert created["position"]["history"] == []


def test_session_replay_determinism(client):
    aid = post_automaton(client, PAPER)
    histories = []
    for _ in range(2):
        gid = client.post(
            "/games",
            json={"automaton_id": aid, "human_side": "bob", "engine_kind": "optimal"},
        ).json()["game_id"]
        state = client.get(f"/games/{gid}").json()
        for _ in range(5):
            state = client.post(
                f"/games/{gid}/moves", json={"letter": state["history"][-1]}
            ).json()
        histories.append(tuple(state["history"]))
    assert histories[0] == histories[1]
