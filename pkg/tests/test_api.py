"""Tests for the HTTP API."""

import pytest
from fastapi.testclient import TestClient

from api.main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/api/v1/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_partitions(client):
    response = client.get("/api/v1/partitions/3")
    assert response.status_code == 200
    assert response.json() == {"n": 3, "count": 3, "partitions": [[3], [2, 1], [1, 1, 1]]}


def test_poincare_endpoints(client):
    body = client.get("/api/v1/poincare/sym/1", params={"genus": 2}).json()
    assert body["coeffs"] == [1, 4, 1]

    body = client.get("/api/v1/poincare/multisym", params={"parts": [1, 1], "genus": 1}).json()
    assert body["coeffs"] == [1, 4, 6, 4, 1]

    body = client.get("/api/v1/poincare/multiproj", params={"dims": [1, 1]}).json()
    assert body["coeffs"] == [1, 0, 2, 0, 1]

    body = client.get("/api/v1/betti/4", params={"genus": 2, "r": 3}).json()
    assert body["betti"] == [{"r": 3, "betti": 8}]


def test_distinguish(client):
    response = client.get("/api/v1/distinguish", params={"a": [3, 3], "b": [4, 2], "genus": 1})
    assert response.status_code == 200
    cert = response.json()["certificate"]
    assert cert["kind"] == "FiberMultiproj"
    assert cert["payload"] == {"dims_a": [2, 2], "dims_b": [3, 1]}


def test_classify(client):
    body = client.get("/api/v1/classify/5", params={"genus": 1}).json()
    assert body["count"] == 7
    assert body["upper_bound"] == 7


def test_divisors(client):
    body = client.get("/api/v1/divisors/slope", params={"rank": 2, "degree": 3}).json()
    assert (body["numerator"], body["denominator"], body["integral"]) == (3, 2, False)

    body = client.get("/api/v1/divisors/thresholds", params={"rank": 1, "degree": 5}).json()
    assert body["dp_threshold"] == 6

    body = client.get("/api/v1/divisors/quotdeg", params={"rank": 2, "degree": -4, "deg_d": 3}).json()
    assert body["constituent"]["has_wpp"] is True


def test_invalid_input_is_400(client):
    response = client.get("/api/v1/poincare/multiproj", params={"dims": [2, -1]})
    assert response.status_code == 400
    assert response.json() == {
        "error": {
            "code": "InvalidInputError",
            "message": "projective dimension must be a non-negative integer, got -1",
            "details": None,
        }
    }

    response = client.get("/api/v1/distinguish", params={"a": [3], "b": [1, 1], "genus": 1})
    assert response.status_code == 400


def test_validation_error_is_422(client):
    response = client.get("/api/v1/poincare/sym/2", params={"genus": -1})
    assert response.status_code == 422


@pytest.mark.parametrize("path", [
    "/api/v1/partitions/0",
    "/api/v1/partitions/75",
    "/api/v1/classify/17?genus=1",
    "/api/v1/classify/0?genus=1",
    "/api/v1/betti/5000?genus=1",
    "/api/v1/poincare/sym/2?genus=5000",
])
def test_oversized_requests_are_rejected(client, path):
    assert client.get(path).status_code == 422


def test_largest_allowed_partition_list(client):
    body = client.get("/api/v1/partitions/40").json()
    assert body["count"] == 37338
    assert len(body["partitions"]) == 37338
