"""
Tests de la API
===============

Endpoints con TestClient: respuestas correctas y traducción de errores de
dominio a 400 / 422.
"""

from fastapi.testclient import TestClient

from core.config import settings
from main import app

client = TestClient(app)
API = settings.API_V1_STR


class TestRoot:
    def test_root(self):
        response = client.get("/")
        assert response.status_code == 200
        assert settings.APP_NAME in response.json()["message"]


class TestRandic:
    def test_values(self):
        response = client.post(f"{API}/randic/", json={"text": "C~\nEhEG\n"})
        assert response.status_code == 200
        data = response.json()
        assert [entry["value"]["exact"] for entry in data] == ["2", "3"]
        assert data[0]["gap_identity"] is True

    def test_edge_list(self):
        response = client.post(f"{API}/randic/", json={"text": "3 2\n0 1\n1 2\n"})
        assert response.status_code == 200
        assert response.json()[0]["value"]["exact"] == "sqrt(2)"

    def test_format_error(self):
        response = client.post(f"{API}/randic/", json={"text": "C\x01\n"})
        assert response.status_code == 400

    def test_empty_text(self):
        response = client.post(f"{API}/randic/", json={"text": "  "})
        assert response.status_code == 422

    def test_file_upload(self):
        response = client.post(
            f"{API}/randic/file",
            files={"file": ("graphs.g6", b"C~\n", "text/plain")},
        )
        assert response.status_code == 200
        assert response.json()[0]["graph6"] == "C~"

    def test_file_not_utf8(self):
        response = client.post(
            f"{API}/randic/file",
            files={"file": ("graphs.g6", b"\xff\xfe", "text/plain")},
        )
        assert response.status_code == 400


class TestApex:
    def test_certificates(self):
        response = client.post(f"{API}/apex/", json={"text": "C~\n"})
        assert response.status_code == 200
        [entry] = response.json()
        assert entry["k"] == 2
        assert entry["witness"] == [0, 1]

    def test_disconnected_is_reported(self):
        response = client.post(f"{API}/apex/", json={"text": "4 2\n0 1\n2 3\n"})
        assert response.status_code == 200
        assert response.json()[0]["error"]


class TestAudits:
    def test_lemma5(self):
        response = client.get(f"{API}/audits/lemmas/L5", params={"grid": "4..30"})
        assert response.status_code == 200
        [claim] = response.json()["claims"]
        assert claim["verdict"] == "fails"
        assert claim["witness"]["x"] == "5"

    def test_lemma_with_params(self):
        response = client.get(f"{API}/audits/lemmas/L6", params={"grid": "0..5", "params": "4", "relative": True})
        assert response.status_code == 200
        assert response.json()["claims"][0]["verdict"] == "holds-on-grid"

    def test_lemma_missing_params(self):
        response = client.get(f"{API}/audits/lemmas/L2", params={"grid": "1..5"})
        assert response.status_code == 400

    def test_unknown_lemma(self):
        response = client.get(f"{API}/audits/lemmas/L9", params={"grid": "1..5"})
        assert response.status_code == 422

    def test_gap_identity(self):
        response = client.get(f"{API}/audits/lemma1", params={"n": 4})
        assert response.status_code == 200
        assert response.json()["holds"] is True

    def test_theorem1(self):
        response = client.get(f"{API}/audits/theorem1", params={"k": 2, "n": 4})
        assert response.status_code == 200
        data = response.json()
        assert data["theorem_consistent"] is True
        assert data["regular_witnesses"][0]["graph6"] == "C~"

    def test_conjecture_out_of_scope(self):
        response = client.get(f"{API}/audits/conjecture", params={"k": 2, "n": 5})
        assert response.status_code == 400


class TestFamily:
    def test_extremal_value(self):
        response = client.get(f"{API}/family/extremal-value/7")
        assert response.status_code == 200
        assert response.json()["exact"] == "8/3 + 1/3*sqrt(6)"

    def test_construct(self):
        response = client.get(f"{API}/family/construct", params={"k": 2, "n": 8})
        assert response.status_code == 200
        data = response.json()
        assert data["found"] is True
        assert data["membership"]["verdict"] == "member"
        assert data["membership"]["value"] == data["membership"]["extremal_value"]

    def test_membership(self):
        text = "6 8\n0 1\n0 2\n0 3\n1 2\n1 3\n2 4\n4 5\n5 3\n"
        response = client.post(f"{API}/family/membership", json={"text": text, "k": 2})
        assert response.status_code == 200
        assert response.json()[0]["verdict"] == "order-too-small"

    def test_membership_requires_k_two(self):
        response = client.post(f"{API}/family/membership", json={"text": "C~\n", "k": 1})
        assert response.status_code == 422


class TestEnumeration:
    def test_connected(self):
        response = client.get(f"{API}/enumeration/connected/5")
        assert response.status_code == 200
        assert response.json()["count"] == 21

    def test_connected_guard(self):
        response = client.get(f"{API}/enumeration/connected/11")
        assert response.status_code == 422

    def test_apex_trees_pagination(self):
        response = client.get(f"{API}/enumeration/apex-trees", params={"k": 1, "n": 4, "per_page": 2})
        assert response.status_code == 200
        data = response.json()
        assert len(data["data"]) == 2
        assert data["meta"]["totalItems"] == 3
        assert data["meta"]["totalPages"] == 2
        assert data["meta"]["hasNextPage"] is True
        assert data["meta"]["hasPrevPage"] is False

    def test_apex_trees_invalid(self):
        response = client.get(f"{API}/enumeration/apex-trees", params={"k": 3, "n": 3})
        assert response.status_code == 400

    def test_cross_check(self):
        response = client.get(f"{API}/enumeration/cross-check", params={"k": 1, "n": 5})
        assert response.status_code == 200
        data = response.json()
        assert data["count_a"] == data["count_b"] == data["count"]
