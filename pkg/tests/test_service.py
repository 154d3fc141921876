from fastapi.testclient import TestClient

from multiarr.service import app

client = TestClient(app)


def test_healthz():
    response = client.get("/healthz")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_exponents_endpoint():
    body = {"divisor": {"points": ["inf", "0", "1", "2"], "mult": [5, 1, 1, 1]}}
    response = client.post("/exponents", json=body)
    assert response.status_code == 200
    data = response.json()
    assert (data["e1"], data["e2"]) == (3, 5)
    assert data["case_tag"] == "dominant"
    assert data["predicted"] == [3, 5]
    assert len(data["basis"]) == 2


def test_classify_endpoint():
    response = client.post("/classify", json={"mult": [2, 2, 2, 2, 2]})
    assert response.status_code == 200
    assert response.json() == {"case_tag": "all_twos", "predicted": [5, 5], "ntilde": 10}


def test_det_endpoint():
    response = client.post("/det", json={"mult": [3, 3, 1, 1]})
    assert response.status_code == 200
    data = response.json()
    assert data["size"] == 2
    assert data["det"]["variables"] == [3, 4]
    assert data["det"]["terms"] == [
        {"exponents": [3, 1], "coeff": "1"},
        {"exponents": [1, 3], "coeff": "-1"},
    ]


def test_d1_endpoint():
    response = client.post("/d1", json={"mult": [3, 2, 2, 1]})
    assert response.status_code == 200
    terms = response.json()["d1"]["terms"]
    assert terms == [
        {"exponents": [1, 0], "coeff": "-2"},
        {"exponents": [0, 1], "coeff": "1"},
    ]


def test_degenerate_endpoint_with_witness():
    body = {"divisor": {"points": ["0", "inf", "1", "-1"], "mult": [3, 3, 1, 1]}}
    response = client.post("/degenerate", json=body)
    assert response.status_code == 200
    data = response.json()
    assert data["degenerate"] is True
    assert data["witness"]["degree"] == 3

    body = {"divisor": {"points": ["0", "inf", "1", "2"], "mult": [3, 3, 1, 1]}}
    data = client.post("/degenerate", json=body).json()
    assert data["degenerate"] is False and data["witness"] is None


def test_scan_endpoint():
    response = client.post("/scan", json={"mult": [3, 3, 1, 1], "lo": -2, "hi": 2})
    assert response.status_code == 200
    data = response.json()
    assert ["1", "-1"] in data["degenerate"]
    assert data["divisibility"] == {"z3": False, "z4": False, "z3-z4": False}


def test_sigma_endpoint():
    response = client.post("/sigma", json={"mr": 2, "u": 3})
    assert response.status_code == 200
    assert response.json() == {"value": -4, "closed_form": -4, "two_block_form": -3}


def test_leading_check_endpoint():
    response = client.post("/leading-check", json={"mult": [2, 2, 2, 2]})
    assert response.status_code == 200
    data = response.json()
    assert data["match"] is True and data["attaining_partitions"] == 2


def test_schur_check_endpoint():
    response = client.post("/schur-check", json={"mult": [4, 4, 1, 1, 1, 1]})
    assert response.status_code == 200
    data = response.json()
    assert data["match"] is True
    assert data["sign"] in (1, -1)
    assert data["lambda"] == [1, 2]


def test_terao_endpoint():
    body = {
        "arrangement": {
            "lines": [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]]
        }
    }
    response = client.post("/terao", json=body)
    assert response.status_code == 200
    data = response.json()
    assert data["guaranteed"] is True
    assert any(c["kind"] == "high_multiplicity_point" for c in data["certificates"])


def test_domain_error_maps_to_400():
    response = client.post("/det", json={"mult": [3, 3, 1]})  # odd total
    assert response.status_code == 400
    data = response.json()
    assert data["error"] == "invalid_input"
    assert "odd" in data["message"]


def test_schema_violation_maps_to_422():
    response = client.post("/det", json={"mult": "not-a-list"})
    assert response.status_code == 422


def test_unsorted_multiplicities_are_sorted():
    response = client.post("/classify", json={"mult": [1, 1, 5, 1]})
    assert response.status_code == 200
    assert response.json()["case_tag"] == "dominant"
