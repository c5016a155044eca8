import unittest

from fastapi.testclient import TestClient

from app.conf.app_settings import search_settings, server_settings
from app.main import app

_client = TestClient(app)
_path = f"{server_settings.CONTEXT_PATH}/search"


class TestSearchApi(unittest.TestCase):

    def test_given_small_range_when_search_then_ranked_results(self):
        # Arrange
        body = {"x_max": 10, "y_max": 30, "exp_min": 2, "exp_max": 3, "top_k": 3, "worker_count": 1}

        # Act
        response = _client.post(_path, json=body)

        # Assert
        self.assertEqual(response.status_code, 200)
        report = response.json()
        self.assertTrue(report["completed"])
        self.assertEqual(len(report["results"]), 3)

    def test_given_range_above_limit_when_search_then_bad_request(self):
        body = {"x_max": search_settings.API_MAX_BASE + 1, "y_max": 10}

        response = _client.post(_path, json=body)

        self.assertEqual(response.status_code, 400)

    def test_given_checkpoint_when_search_then_bad_request(self):
        response = _client.post(_path, json={"x_max": 5, "y_max": 5, "checkpoint_path": "/tmp/x.json"})

        self.assertEqual(response.status_code, 400)

    def test_given_reversed_exponents_when_search_then_unprocessable(self):
        response = _client.post(_path, json={"x_max": 5, "y_max": 5, "exp_min": 4, "exp_max": 2})

        self.assertEqual(response.status_code, 422)

    def test_given_known_near_miss_when_guard_then_nonzero(self):
        # Act
        response = _client.get(f"{_path}/guard", params={"x": 433, "m": 6, "y": 972, "n": 6, "z": 42089, "r": 6})

        # Assert
        self.assertEqual(response.status_code, 200)
        self.assertTrue(response.json()["nonzero"])
        self.assertEqual(response.json()["independence"]["verdict"], "independent")

    def test_given_cost_parameters_above_limits_when_search_then_bad_request(self):
        # Arrange
        over_limits = [
            {"exp_max": search_settings.API_MAX_EXPONENT + 1},
            {"worker_count": search_settings.API_MAX_WORKERS + 1},
            {"pool_size": search_settings.API_MAX_POOL_SIZE + 1},
            {"top_k": search_settings.API_MAX_TOP_K + 1},
        ]

        for overrides in over_limits:
            # Act
            response = _client.post(_path, json={"x_max": 5, "y_max": 5, **overrides})

            # Assert
            self.assertEqual(response.status_code, 400, overrides)
            self.assertEqual(response.headers["X-Error"], "400.INVALID_INPUT")

    def test_given_exponent_above_limit_when_guard_then_unprocessable(self):
        big = search_settings.API_MAX_EXPONENT + 1
        params = {"x": 433, "m": 6, "y": 972, "n": 6, "z": 42089, "r": 6}

        for name in ("m", "n", "r"):
            response = _client.get(f"{_path}/guard", params={**params, name: big})

            self.assertEqual(response.status_code, 422, name)
