import unittest

from fastapi.testclient import TestClient

from app.conf.app_settings import server_settings
from app.main import app

_client = TestClient(app)
_path = f"{server_settings.CONTEXT_PATH}/cyclotomic"


class TestCyclotomicApi(unittest.TestCase):

    def test_given_twelve_when_poly_then_coefficients(self):
        response = _client.get(f"{_path}/poly/12")

        self.assertEqual(response.json(), [1, 0, -1, 0, 1])

    def test_given_five_when_vandermonde_then_identities_hold(self):
        response = _client.get(f"{_path}/vandermonde/5")

        self.assertEqual(response.json(), {"n": 5, "unitary": True, "det_norm": 3125, "identity_holds": True})

    def test_given_cube_roots_when_mann_then_holds(self):
        # Arrange
        body = {"n": 3, "terms": [[1, 0], [1, 1], [1, 2]]}

        # Act
        response = _client.post(f"{_path}/mann", json=body)

        # Assert
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()["primorial"], 6)
        self.assertTrue(response.json()["holds"])

    def test_given_non_vanishing_sum_when_mann_then_bad_request(self):
        response = _client.post(f"{_path}/mann", json={"n": 3, "terms": [[1, 0], [1, 1]]})

        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.headers["X-Error"], "400.HYPOTHESIS_VIOLATION")

    def test_given_four_when_vanishing_sums_then_one_sum(self):
        response = _client.get(f"{_path}/vanishing-sums", params={"n": 4, "max_terms": 4})

        self.assertEqual(response.json(), [{"n": 4, "terms": [[1, 0], [1, 2]]}])
