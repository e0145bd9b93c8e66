import json
import socket
import subprocess
import sys
import threading
import time
import urllib.error
import urllib.request

import jsonschema
import pytest

from luminous.cli import main
from luminous.server import make_server
from luminous.solver import random_solvable
from luminous.wire import SCHEMAS


@pytest.fixture(scope="module")
def base_url():
    server = make_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()
    thread.join(timeout=5)


def get(base_url, path):
    with urllib.request.urlopen(base_url + path) as resp:
        return resp.status, resp.read()


def post(base_url, path, body):
    req = urllib.request.Request(
        base_url + path,
        data=json.dumps(body).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(req) as resp:
        return resp.status, resp.read()


class TestBoardEndpoint:
    def test_seeded_board(self, base_url):
        status, body = get(base_url, "/api/board?rows=2&cols=5&seed=7")
        payload = json.loads(body)
        jsonschema.validate(payload, SCHEMAS["board"])
        assert status == 200
        config, _ = random_solvable(2, 5, 7)
        assert payload["config"] == config.to_string()
        assert payload["solvable"] is True

    def test_identical_requests_identical_responses(self, base_url):
        _, first = get(base_url, "/api/board?rows=3&cols=3&seed=42")
        _, second = get(base_url, "/api/board?rows=3&cols=3&seed=42")
        assert first == second

    def test_missing_params(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as err:
            get(base_url, "/api/board?rows=2")
        assert err.value.code == 400


class TestCriterionEndpoint:
    def test_sixteen_by_sixteen(self, base_url):
        _, body = get(base_url, "/api/criterion?rows=16&cols=16")
        payload = json.loads(body)
        assert payload["singular"] is False
        assert payload["conditions"] == []

    def test_singular_grid(self, base_url):
        _, body = get(base_url, "/api/criterion?rows=2&cols=5")
        assert json.loads(body)["conditions"] == ["C1"]


class TestDetEndpoint:
    def test_closed_form_value(self, base_url):
        _, body = get(base_url, "/api/det?rows=2&cols=4")
        payload = json.loads(body)
        jsonschema.validate(payload, SCHEMAS["det"])
        assert payload["bareiss"] == "5"


class TestSolveEndpoint:
    def test_worked_example(self, base_url):
        _, body = post(
            base_url, "/api/solve", {"rows": 2, "cols": 5, "config": "0101001010"}
        )
        payload = json.loads(body)
        jsonschema.validate(payload, SCHEMAS["solve"])
        assert payload["minimal"]["buttons"] == [3, 8]

    def test_byte_identical_with_cli(self, base_url, capsys):
        _, body = post(
            base_url, "/api/solve", {"rows": 2, "cols": 5, "config": "0101001010"}
        )
        code = main(["solve", "--rows", "2", "--cols", "5", "--config", "0101001010"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.encode() == body + b"\n"

    def test_bad_config_rejected(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as err:
            post(base_url, "/api/solve", {"rows": 2, "cols": 5, "config": "01"})
        assert err.value.code == 400
        assert "error" in json.loads(err.value.read())

    def test_invalid_json_rejected(self, base_url):
        req = urllib.request.Request(
            base_url + "/api/solve", data=b"{nope", method="POST"
        )
        with pytest.raises(urllib.error.HTTPError) as err:
            urllib.request.urlopen(req)
        assert err.value.code == 400


class TestHintEndpoint:
    def test_worked_example(self, base_url):
        _, body = post(
            base_url, "/api/hint", {"rows": 2, "cols": 5, "config": "0101001010"}
        )
        payload = json.loads(body)
        jsonschema.validate(payload, SCHEMAS["hint"])
        assert payload["hint"] == 3
        assert payload["solvable"] is True

    def test_unsolvable_board(self, base_url):
        _, body = post(
            base_url, "/api/hint", {"rows": 2, "cols": 5, "config": "1000000000"}
        )
        payload = json.loads(body)
        assert payload["hint"] is None
        assert payload["solvable"] is False

    def test_dark_board_has_no_hint(self, base_url):
        _, body = post(
            base_url, "/api/hint", {"rows": 2, "cols": 5, "config": "0000000000"}
        )
        assert json.loads(body)["hint"] is None


class TestRoutingAndStatic:
    def test_unknown_api_endpoint(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as err:
            get(base_url, "/api/nothing")
        assert err.value.code == 404

    def test_root_serves_html(self, base_url):
        with urllib.request.urlopen(base_url + "/") as resp:
            assert resp.status == 200
            assert "text/html" in resp.headers["Content-Type"]

    def test_path_traversal_blocked(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as err:
            get(base_url, "/../pyproject.toml")
        assert err.value.code == 404

    def test_bind_failure_exit_code(self, base_url):
        port = int(base_url.rsplit(":", 1)[1])
        assert main(["serve", "--port", str(port)]) == 1


class TestServeSubcommand:
    def test_serves_until_terminated(self):
        with socket.socket() as probe:
            probe.bind(("127.0.0.1", 0))
            port = probe.getsockname()[1]
        proc = subprocess.Popen(
            [sys.executable, "-m", "luminous", "serve", "--port", str(port)],
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True,
        )
        try:
            deadline = time.monotonic() + 10
            payload = None
            while time.monotonic() < deadline:
                try:
                    with urllib.request.urlopen(
                        f"http://127.0.0.1:{port}/api/criterion?rows=2&cols=5"
                    ) as resp:
                        payload = json.load(resp)
                    break
                except (urllib.error.URLError, ConnectionError):
                    time.sleep(0.1)
            assert payload == {
                "rows": 2,
                "cols": 5,
                "singular": True,
                "conditions": ["C1"],
            }
        finally:
            proc.terminate()
            proc.wait(timeout=10)
