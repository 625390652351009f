import pytest
from rest_framework.test import APIClient

ENDPOINTS = {"default": {"base_url": "http://127.0.0.1:9/v1", "model_name": "grid-lm"}}


@pytest.fixture
def api_client(dataset_settings, completion_cache_dir, monkeypatch):
    monkeypatch.delenv("LOADPATH_MODEL_API_KEY", raising=False)
    return APIClient()


def payload(**overrides):
    return {
        "subjects": ["cells1"],
        "difficulties": ["easy"],
        "sample_count": 2,
        "concurrency": 1,
        "endpoints": ENDPOINTS,
        **overrides,
    }


def test_run_is_queued_and_executed(api_client, dataset_settings, tmp_path):
    response = api_client.post("/api/v1/runs/", payload(), format="json")

    assert response.status_code == 202
    task_id = response.json()["data"]["task_id"]
    output = tmp_path / "runs" / f"{task_id}.jsonl"
    lines = output.read_text().splitlines()
    assert len(lines) == 2
    assert '"call_failed"' in lines[0]


def test_api_key_is_required_when_configured(api_client, settings):
    settings.LOADPATH_API_TOKEN = "s3cret"

    denied = api_client.post("/api/v1/runs/", payload(), format="json")
    allowed = api_client.post(
        "/api/v1/runs/", payload(), format="json", HTTP_X_API_KEY="s3cret"
    )

    assert denied.status_code == 403
    assert denied.json()["success"] is False
    assert allowed.status_code == 202


def test_unknown_endpoint(api_client):
    response = api_client.post("/api/v1/runs/", payload(endpoint="nightly"), format="json")

    assert response.status_code == 404
    assert "nightly" in response.json()["error"]


@pytest.mark.parametrize(
    "overrides, field",
    [({"shots": 2}, "shots"), ({"subjects": ["rows2"]}, "subjects"), ({"colour": 1}, "colour")],
)
def test_invalid_run_payload(api_client, overrides, field):
    response = api_client.post("/api/v1/runs/", payload(**overrides), format="json")

    assert response.status_code == 400
    assert response.json()["error"].startswith(field)
