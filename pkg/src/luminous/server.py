"""Embedded HTTP service: JSON API plus the static web UI.

Stateless by design; every request carries the full board, so identical
requests get identical responses.  Endpoints:

    GET  /api/board?rows=&cols=&seed=   fresh solvable board
    GET  /api/criterion?rows=&cols=     closed-form singularity verdict
    GET  /api/det?rows=&cols=           determinant report
    POST /api/solve                     {"rows","cols","config"} -> solve report
    POST /api/hint                      {"rows","cols","config"} -> next button

Everything else is served from the static bundle directory.
"""

from __future__ import annotations

import json
import logging
import mimetypes
import secrets
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional
from urllib.parse import parse_qs, urlparse

from .board import Config, GridDims
from .criterion import classify
from .errors import DomainError, SizeLimitError
from .limits import check_grid
from .solver import random_solvable, solve_full
from .spectral import det_full
from .wire import (
    board_dict,
    canonical_json,
    criterion_dict,
    det_dict,
    hint_dict,
    solve_report_dict,
)

log = logging.getLogger(__name__)

DEFAULT_STATIC_DIR = Path(__file__).parent / "static"


class ApiError(Exception):
    def __init__(self, status: int, message: str) -> None:
        super().__init__(message)
        self.status = status


def _int_param(params: dict, name: str) -> int:
    values = params.get(name)
    if not values:
        raise ApiError(400, f"missing parameter {name!r}")
    try:
        return int(values[0])
    except ValueError:
        raise ApiError(400, f"parameter {name!r} must be an integer") from None


def _grid_from(params: dict) -> tuple[int, int]:
    rows = _int_param(params, "rows")
    cols = _int_param(params, "cols")
    if rows < 1 or cols < 1:
        raise ApiError(400, "rows and cols must be positive")
    check_grid(rows, cols)
    return rows, cols


def api_board(params: dict) -> dict:
    rows, cols = _grid_from(params)
    if params.get("seed"):
        seed = _int_param(params, "seed")
    else:
        seed = secrets.randbits(63)
    config, _ = random_solvable(rows, cols, seed)
    return board_dict(rows, cols, seed, config)


def api_criterion(params: dict) -> dict:
    rows, cols = _grid_from(params)
    out = criterion_dict(classify(rows, cols))
    out["rows"] = rows
    out["cols"] = cols
    return out


def api_det(params: dict) -> dict:
    rows, cols = _grid_from(params)
    return det_dict(rows, cols, det_full(rows, cols))


def _board_from_body(body: dict) -> tuple[int, int, Config]:
    try:
        rows = int(body["rows"])
        cols = int(body["cols"])
        text = body["config"]
    except (KeyError, TypeError, ValueError):
        raise ApiError(400, "body must carry integer rows/cols and a config string") from None
    if rows < 1 or cols < 1:
        raise ApiError(400, "rows and cols must be positive")
    check_grid(rows, cols)
    if not isinstance(text, str):
        raise ApiError(400, "config must be a string")
    return rows, cols, Config.from_string(GridDims(rows, cols), text)


def api_solve(body: dict) -> dict:
    rows, cols, config = _board_from_body(body)
    return solve_report_dict(config, solve_full(rows, cols, config))


def api_hint(body: dict) -> dict:
    rows, cols, config = _board_from_body(body)
    report = solve_full(rows, cols, config)
    button = None
    if report.solvable and not config.is_zero() and report.minimal is not None:
        buttons = report.minimal.buttons()
        button = buttons[0] if buttons else None
    return hint_dict(rows, cols, report.solvable, button)


_GET_ROUTES = {
    "/api/board": api_board,
    "/api/criterion": api_criterion,
    "/api/det": api_det,
}

_POST_ROUTES = {
    "/api/solve": api_solve,
    "/api/hint": api_hint,
}


class LuminousHandler(BaseHTTPRequestHandler):
    server_version = "luminous"

    def log_message(self, fmt: str, *args) -> None:
        log.debug("%s %s", self.address_string(), fmt % args)

    def _send_json(self, status: int, obj: dict) -> None:
        data = canonical_json(obj).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def do_GET(self) -> None:
        url = urlparse(self.path)
        handler = _GET_ROUTES.get(url.path)
        if handler is not None:
            try:
                self._send_json(200, handler(parse_qs(url.query)))
            except ApiError as exc:
                self._send_json(exc.status, {"error": str(exc)})
            except (DomainError, SizeLimitError) as exc:
                self._send_json(400, {"error": str(exc)})
            return
        if url.path.startswith("/api/"):
            self._send_json(404, {"error": "unknown endpoint"})
            return
        self._serve_static(url.path)

    def do_POST(self) -> None:
        url = urlparse(self.path)
        handler = _POST_ROUTES.get(url.path)
        if handler is None:
            self._send_json(404, {"error": "unknown endpoint"})
            return
        try:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length)
            body = json.loads(raw.decode() or "{}")
            if not isinstance(body, dict):
                raise ApiError(400, "body must be a JSON object")
            self._send_json(200, handler(body))
        except json.JSONDecodeError:
            self._send_json(400, {"error": "body is not valid JSON"})
        except ApiError as exc:
            self._send_json(exc.status, {"error": str(exc)})
        except (DomainError, SizeLimitError) as exc:
            self._send_json(400, {"error": str(exc)})

    def _serve_static(self, path: str) -> None:
        root: Path = self.server.static_root  # type: ignore[attr-defined]
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        try:
            inside = target.is_relative_to(root.resolve())
        except ValueError:
            inside = False
        if not inside or not target.is_file():
            self.send_error(404, "not found")
            return
        ctype = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        data = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(
    host: str = "127.0.0.1", port: int = 8160, static_dir: Optional[str] = None
) -> ThreadingHTTPServer:
    """Bind the service; caller drives serve_forever/shutdown."""
    server = ThreadingHTTPServer((host, port), LuminousHandler)
    server.static_root = Path(static_dir) if static_dir else DEFAULT_STATIC_DIR  # type: ignore[attr-defined]
    return server


def run_server(host: str, port: int, static_dir: Optional[str] = None) -> None:
    server = make_server(host, port, static_dir)
    address = f"http://{server.server_address[0]}:{server.server_address[1]}/"
    print(f"serving on {address}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
