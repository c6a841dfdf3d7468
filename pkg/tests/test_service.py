"""HTTP session service: the interactive authoring workflow."""
import pytest
from fastapi.testclient import TestClient

from ontotdd.service import create_app
from conftest import FIXTURES

GIRAFFE_TEXT = (FIXTURES / "giraffe.ofn").read_text()


@pytest.fixture
def client():
    return TestClient(create_app())


def _session(client, text=GIRAFFE_TEXT):
    response = client.post("/sessions", content=text)
    assert response.status_code == 200
    return response.json()


def test_create_session_giraffe(client):
    body = _session(client)
    assert body["consistent"] is True
    assert body["coherent"] is True
    assert body["unsatisfiable"] == []
    assert body["id"]


def test_create_session_empty_document(client):
    body = _session(client, "")
    sig = client.get(f"/sessions/{body['id']}/signature").json()
    assert sig == {"classes": [], "roles": [], "individuals": []}


def test_create_session_incoherent_reported(client):
    body = _session(client, (FIXTURES / "incoherent.ofn").read_text())
    assert body["consistent"] is True
    assert body["coherent"] is False
    assert body["unsatisfiable"] == ["A"]


def test_create_session_parse_error(client):
    response = client.post("/sessions", content="SubClassOf(A)")
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["line"] == 1 and detail["kind"] == "syntax"


def test_unknown_session_404(client):
    assert client.get("/sessions/nope/signature").status_code == 404


def test_signature_endpoint(client):
    body = _session(client)
    sig = client.get(f"/sessions/{body['id']}/signature").json()
    assert sig["classes"] == ["Animal", "Giraffe", "Herbivore", "Mammal", "Plant"]
    assert sig["roles"] == ["eats"]


def test_add_pending_and_evaluate(client):
    sid = _session(client)["id"]
    pos = client.post(f"/sessions/{sid}/pending", json={"text": "Giraffe SubClassOf: Mammal"}).json()
    assert pos == {"position": 0}
    results = client.post(f"/sessions/{sid}/evaluate", json={}).json()
    assert results == [
        {"position": 0, "result": {"kind": "verdict", "value": "entailed"}}
    ]


def test_add_pending_parse_error_recorded(client):
    sid = _session(client)["id"]
    body = client.post(f"/sessions/{sid}/pending", json={"text": "Giraffe SubClassOf:"}).json()
    assert body["position"] == 0
    assert body["parseError"]["kind"] == "syntax"
    results = client.post(f"/sessions/{sid}/evaluate", json={}).json()
    assert results[0]["result"] is None


def test_evaluate_empty_selection(client):
    sid = _session(client)["id"]
    client.post(f"/sessions/{sid}/pending", json={"text": "Giraffe SubClassOf: Mammal"})
    assert client.post(f"/sessions/{sid}/evaluate", json={"positions": []}).json() == []


def test_evaluate_selection_order_and_independence(client):
    sid = _session(client)["id"]
    texts = [
        "Giraffe SubClassOf: Mammal",
        "Zebra SubClassOf: Mammal",
        "Animal SubClassOf: Giraffe",
    ]
    for t in texts:
        client.post(f"/sessions/{sid}/pending", json={"text": t})
    both = client.post(f"/sessions/{sid}/evaluate", json={"positions": [2, 0]}).json()
    assert [r["position"] for r in both] == [2, 0]
    singles = [
        client.post(f"/sessions/{sid}/evaluate", json={"positions": [p]}).json()[0]
        for p in (2, 0)
    ]
    assert both == singles
    missing = client.post(f"/sessions/{sid}/evaluate", json={"positions": [1]}).json()[0]
    assert missing["result"] == {
        "kind": "precondition", "value": "missing-entities", "missing": ["Zebra"],
    }


def test_commit_then_entailed(client):
    sid = _session(client)["id"]
    client.post(f"/sessions/{sid}/pending", json={"text": "Plant SubClassOf: Animal"})
    result = client.post(f"/sessions/{sid}/evaluate", json={}).json()[0]
    assert result["result"]["value"] == "absent"
    status = client.post(f"/sessions/{sid}/commit", json={"positions": [0]}).json()
    assert status == {"consistent": True, "coherent": True, "unsatisfiable": []}
    client.post(f"/sessions/{sid}/pending", json={"text": "Plant SubClassOf: Animal"})
    result = client.post(f"/sessions/{sid}/evaluate", json={}).json()[0]
    assert result["result"]["value"] == "entailed"


def test_commit_resets_remaining_to_unevaluated(client):
    sid = _session(client)["id"]
    client.post(f"/sessions/{sid}/pending", json={"text": "Plant SubClassOf: Animal"})
    client.post(f"/sessions/{sid}/pending", json={"text": "Giraffe SubClassOf: Mammal"})
    client.post(f"/sessions/{sid}/evaluate", json={})
    client.post(f"/sessions/{sid}/commit", json={"positions": [0]})
    pending = client.get(f"/sessions/{sid}/pending").json()
    assert pending == [
        {"position": 0, "text": "Giraffe SubClassOf: Mammal", "parseError": None, "result": None}
    ]


def test_commit_empty_selection_is_noop(client):
    sid = _session(client)["id"]
    before = client.get(f"/sessions/{sid}/diag").json()
    client.post(f"/sessions/{sid}/commit", json={"positions": []})
    after = client.get(f"/sessions/{sid}/diag").json()
    assert before == after == {"classifyCount": 1}


def test_commit_parse_error_409(client):
    sid = _session(client)["id"]
    client.post(f"/sessions/{sid}/pending", json={"text": "Giraffe SubClassOf:"})
    response = client.post(f"/sessions/{sid}/commit", json={"positions": [0]})
    assert response.status_code == 409


def test_commit_causing_inconsistency_reported(client):
    sid = _session(client, "ClassAssertion(C a)\nDeclaration(Class(D))")["id"]
    client.post(f"/sessions/{sid}/pending", json={"text": "a Type: not C"})
    status = client.post(f"/sessions/{sid}/commit", json={"positions": [0]}).json()
    assert status["consistent"] is False
    client.post(f"/sessions/{sid}/pending", json={"text": "C SubClassOf: D"})
    result = client.post(f"/sessions/{sid}/evaluate", json={}).json()[0]
    assert result["result"] == {"kind": "precondition", "value": "ontology-inconsistent"}


def test_classify_count_one_per_commit_batch(client):
    sid = _session(client)["id"]
    for text in ("Plant SubClassOf: Animal", "Giraffe SubClassOf: Animal"):
        client.post(f"/sessions/{sid}/pending", json={"text": text})
    client.post(f"/sessions/{sid}/evaluate", json={})
    client.post(f"/sessions/{sid}/commit", json={"positions": [0, 1]})
    assert client.get(f"/sessions/{sid}/diag").json() == {"classifyCount": 2}


def test_signature_unchanged_by_commit_of_known_names(client):
    sid = _session(client)["id"]
    before = client.get(f"/sessions/{sid}/signature").json()
    client.post(f"/sessions/{sid}/pending", json={"text": "Plant SubClassOf: Animal"})
    client.post(f"/sessions/{sid}/commit", json={"positions": [0]})
    after = client.get(f"/sessions/{sid}/signature").json()
    assert before == after


def test_export_round_trips(client):
    sid = _session(client)["id"]
    client.post(f"/sessions/{sid}/pending", json={"text": "Plant SubClassOf: Animal"})
    client.post(f"/sessions/{sid}/commit", json={"positions": [0]})
    text = client.get(f"/sessions/{sid}/export").text
    assert text.splitlines()[-1] == "SubClassOf(Plant Animal)"  # appended last
    # a new session over the export sees the same ontology
    sid2 = _session(client, text)["id"]
    sig1 = client.get(f"/sessions/{sid}/signature").json()
    sig2 = client.get(f"/sessions/{sid2}/signature").json()
    assert sig1 == sig2


def test_session_isolation(client):
    a = _session(client)["id"]
    b = _session(client, "Declaration(Class(Solo))")["id"]
    client.post(f"/sessions/{a}/pending", json={"text": "Giraffe SubClassOf: Mammal"})
    assert client.get(f"/sessions/{b}/pending").json() == []
    sig_b = client.get(f"/sessions/{b}/signature").json()
    assert sig_b["classes"] == ["Solo"]


def test_session_eviction():
    app = create_app(eviction_seconds=0.0)
    client = TestClient(app)
    sid = _session(client)["id"]
    import time

    time.sleep(0.01)
    assert client.get(f"/sessions/{sid}/signature").status_code == 404
