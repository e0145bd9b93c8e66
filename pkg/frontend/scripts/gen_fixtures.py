#!/usr/bin/env python3
"""Regenerate the golden fixtures under tests/fixtures/.

Boards and API responses are captured from a live server instance over
real HTTP; expected configs for click sequences are re-simulated with
the server's own press dynamics.  Run from anywhere:

    python frontend/scripts/gen_fixtures.py
"""

from __future__ import annotations

import json
import random
import threading
import urllib.request
from pathlib import Path

from luminous.board import Config, GridDims, press
from luminous.server import make_server

FIXTURES = Path(__file__).parent.parent / "tests" / "fixtures"


def http_get(base: str, path: str) -> dict:
    with urllib.request.urlopen(base + path) as resp:
        return json.load(resp)


def http_post(base: str, path: str, body: dict) -> dict:
    req = urllib.request.Request(
        base + path,
        data=json.dumps(body).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(req) as resp:
        return json.load(resp)


def toggle_cases(base: str) -> list[dict]:
    rng = random.Random(20250810)
    cases = []
    for i in range(50):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        board = http_get(base, f"/api/board?rows={rows}&cols={cols}&seed={1000 + i}")
        clicks = [rng.randint(1, rows * cols) for _ in range(rng.randint(0, 14))]
        config = Config.from_string(GridDims(rows, cols), board["config"])
        for j in clicks:
            config = press(config, j)
        cases.append(
            {
                "rows": rows,
                "cols": cols,
                "initial": board["config"],
                "clicks": clicks,
                "expected": config.to_string(),
            }
        )
    return cases


def api_captures(base: str) -> dict:
    worked = {"rows": 2, "cols": 5, "config": "0101001010"}
    unsolvable = {"rows": 2, "cols": 5, "config": "1000000000"}
    solve_cases = []
    for i, (rows, cols) in enumerate(
        [(2, 5), (3, 3), (4, 4), (5, 5), (2, 3), (6, 4), (1, 6), (5, 2)]
    ):
        board = http_get(base, f"/api/board?rows={rows}&cols={cols}&seed={7 + i}")
        solve_cases.append(
            {
                "board": board,
                "solve": http_post(
                    base,
                    "/api/solve",
                    {"rows": rows, "cols": cols, "config": board["config"]},
                ),
            }
        )
    return {
        "worked_hint": {"request": worked, "response": http_post(base, "/api/hint", worked)},
        "worked_solve": {"request": worked, "response": http_post(base, "/api/solve", worked)},
        "unsolvable_hint": {
            "request": unsolvable,
            "response": http_post(base, "/api/hint", unsolvable),
        },
        "criterion": {
            f"{m}x{n}": http_get(base, f"/api/criterion?rows={m}&cols={n}")
            for m, n in [(2, 5), (5, 5), (3, 3), (16, 16)]
        },
        "solve_cases": solve_cases,
    }


def main() -> None:
    server = make_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    base = f"http://{host}:{port}"
    try:
        FIXTURES.mkdir(parents=True, exist_ok=True)
        (FIXTURES / "toggles.json").write_text(
            json.dumps(toggle_cases(base), indent=2) + "\n"
        )
        (FIXTURES / "api_fixtures.json").write_text(
            json.dumps(api_captures(base), indent=2) + "\n"
        )
        print(f"fixtures written to {FIXTURES}")
    finally:
        server.shutdown()
        server.server_close()


if __name__ == "__main__":
    main()
