import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from fideals.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"
    assert "version" in body


def test_check_five_cycle(client):
    r = client.post("/check", json={"n": 5, "generators": "1.2, 2.3, 3.4, 4.5, 1.5"})
    assert r.status_code == 200
    body = r.json()
    assert body["is_f_ideal"] is True
    assert body["routes"] == {
        "definition": True,
        "general_degreewise": True,
        "homogeneous": True,
    }
    assert body["f_facet"] == [5, 5] and body["f_nonface"] == [5, 5]
    assert body["failure_detail"] is None
    assert body["classification"]["kind"] == "c5_exceptional"
    assert body["unmixedness"]["unmixed"] is True
    assert body["unmixedness"]["codim"] == 3
    assert body["unmixedness"]["pure"] is True
    assert len(body["unmixedness"]["minimal_primes"]) == 5


def test_check_type_two_member(client):
    r = client.post("/check", json={"n": 4, "generators": "1.2, 1.3, 2.4"})
    body = r.json()
    assert body["is_f_ideal"] is True
    assert body["classification"]["kind"] == "type_l"
    assert body["classification"]["l"] == 2
    b, rest = body["classification"]["witness"]
    assert sorted(b + rest) == [1, 2, 3, 4]


def test_check_non_f_ideal_reports_detail(client):
    r = client.post("/check", json={"n": 4, "generators": "1.2"})
    body = r.json()
    assert body["is_f_ideal"] is False
    assert "not upper perfect" in body["failure_detail"]
    assert body["classification"] is None


def test_check_mixed_degrees_has_no_classification(client):
    # a variable plus the triangle on {2,3,4}: both complexes have
    # f-vector (4, 3)
    r = client.post("/check", json={"n": 5, "generators": "1, 2.3, 2.4, 3.4"})
    body = r.json()
    assert r.status_code == 200
    assert body["is_f_ideal"] is True
    assert body["f_facet"] == [4, 3]
    assert body["classification"] is None
    assert "homogeneous" not in body["routes"]


def test_check_degree_three_f_ideal(client):
    r = client.post(
        "/check", json={"n": 5, "generators": "1.2.3, 1.2.4, 1.2.5, 3.4.5, 2.3.4"}
    )
    body = r.json()
    assert body["is_f_ideal"] is True
    assert body["classification"] is None  # structure census only covers degree 2
    assert body["unmixedness"]["unmixed"] is False
    assert body["unmixedness"]["minimal_primes"][0] == [1, 3]
    assert body["unmixedness"]["minimal_primes"][-1] == [3, 4, 5]


def test_check_rejects_non_antichain(client):
    r = client.post("/check", json={"n": 4, "generators": "1.2, 1.2.3"})
    assert r.status_code == 400
    body = r.json()
    assert body["error"]["kind"] == "input"
    assert "1.2 divides 1.2.3" in body["error"]["message"]


def test_check_rejects_out_of_range_n(client):
    r = client.post("/check", json={"n": 65, "generators": "1.2"})
    assert r.status_code in (400, 422)


def test_perfect_with_fc_block(client):
    r = client.post("/perfect", json={"n": 5, "d": 2, "set": "1.2, 2.3, 3.4, 4.5, 1.5"})
    body = r.json()
    assert body["upper"] is True and body["lower"] is True and body["perfect"] is True
    assert body["size"] == 5
    assert body["fc"] == {
        "cond_degree": True,
        "cond_clique": True,
        "cond_edgecount": True,
        "cond_nonbipartite": True,
        "satisfies_fc": True,
    }


def test_perfect_degree_three_omits_fc(client):
    r = client.post(
        "/perfect", json={"n": 5, "d": 3, "set": "1.2.3, 1.2.4, 1.2.5, 3.4.5, 2.3.4"}
    )
    body = r.json()
    assert body["perfect"] is True
    assert body["fc"] is None


def test_perfect_imperfect_set(client):
    r = client.post("/perfect", json={"n": 4, "d": 2, "set": "1.2, 1.3, 1.4"})
    body = r.json()
    assert body["upper"] is False
    assert body["lower"] is True
    assert body["perfect"] is False


def test_count_v_formula_and_enumeration(client):
    formula = client.post("/count", json={"n": 5, "mode": "V"}).json()
    assert formula["value"] == 72 and formula["method"] == "formula"
    enum = client.post(
        "/count", json={"n": 5, "mode": "V", "method": "enumeration"}
    ).json()
    assert enum["value"] == 72 and enum["method"] == "enumeration"


def test_count_u_modes(client):
    assert client.post("/count", json={"n": 8, "mode": "U"}).json()["value"] == 4200
    enum = client.post(
        "/count", json={"n": 5, "mode": "U", "method": "enumeration"}
    ).json()
    assert enum["value"] == 60


def test_count_perfect_number_with_witness(client):
    body = client.post("/count", json={"n": 5, "mode": "perfect-number"}).json()
    assert body["value"] == 4
    assert body["method"] == "formula"
    assert body["witness"] == "1.3, 2.4, 1.5, 3.5"
    brute = client.post(
        "/count", json={"n": 5, "mode": "perfect-number", "method": "brute"}
    ).json()
    assert brute["value"] == 4
    assert brute["witness"] == "1.2, 1.3, 2.3, 4.5"


def test_count_big_value_serialized_as_string(client):
    body = client.post("/count", json={"n": 64, "mode": "U"}).json()
    assert isinstance(body["value"], str)
    assert int(body["value"]) == body_value_check(64)


def body_value_check(n):
    from fideals.engine import count_least_perfect_f_ideals

    return count_least_perfect_f_ideals(n).value


def test_count_invalid_combo(client):
    r = client.post("/count", json={"n": 5, "mode": "V", "d": 3})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "input"
    r = client.post("/count", json={"n": 5, "mode": "nope"})
    assert r.status_code == 422


def test_count_enumeration_budget(client):
    r = client.post(
        "/count",
        json={"n": 8, "mode": "V", "method": "enumeration", "max_candidates": 10},
    )
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "budget"


def test_construct_with_extra(client):
    r = client.post("/construct", json={"n": 4, "b": [1, 2], "extra": "1.3"})
    body = r.json()
    assert body["generators"] == "1.2, 1.3, 3.4"
    assert body["size"] == 3
    assert body["part"] == [1, 2]
    assert body["extra"] == "1.3"


def test_construct_auto(client):
    r = client.post("/construct", json={"n": 5, "b": [1, 2]})
    body = r.json()
    assert body["generators"] == "1.2, 1.3, 3.4, 3.5, 4.5"
    assert body["extra"] == "1.3"


def test_construct_failures(client):
    r = client.post("/construct", json={"n": 6, "b": [1, 2]})
    assert r.status_code == 400 and r.json()["error"]["kind"] == "input"
    r = client.post("/construct", json={"n": 4, "b": [1]})
    assert r.status_code == 400
    assert "no valid extra set exists" in r.json()["error"]["message"]


def test_enumerate_stream(client):
    r = client.post("/enumerate", json={"n": 4, "d": 2})
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("application/x-ndjson")
    lines = [json.loads(line) for line in r.text.splitlines() if line]
    assert len(lines) == 12
    assert [line["index"] for line in lines] == list(range(12))
    assert lines[0]["generators"] == "1.2, 1.3, 2.4"
    assert all(line["type"] == "type_l" and line["l"] == 2 for line in lines)


def test_enumerate_stream_degree_three(client):
    r = client.post("/enumerate", json={"n": 5, "d": 3})
    lines = [json.loads(line) for line in r.text.splitlines() if line]
    assert len(lines) == 72
    assert all(line["type"] is None and line["l"] is None for line in lines)


def test_enumerate_empty_and_budget(client):
    r = client.post("/enumerate", json={"n": 6, "d": 2})
    assert r.status_code == 200
    assert r.text.strip() == ""
    r = client.post("/enumerate", json={"n": 8, "d": 2, "max_candidates": 10})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "budget"
