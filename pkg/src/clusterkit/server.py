"""HTTP JSON API over the preset seeds.

Endpoints:
    GET  /api/presets
    POST /api/session              {"preset": "b2"}
    GET  /api/session/{id}/seed
    POST /api/session/{id}/mutate  {"vertex": 1}   (1-based, as in walks)
    POST /api/session/{id}/undo
    GET  /api/session/{id}/history

Requests against one session are serialized by a per-session lock, and
replaying a session's recorded walk from its preset reproduces the
current seed exactly (undo relies on that: pop and replay). When a
static directory is configured, anything outside /api is served from
it, so the explorer UI and the API share one origin.
"""

import json
import mimetypes
import os
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .presets import PresetError, preset_names, resolve_preset, sample_specs

_SESSION_ROUTE = re.compile(r"^/api/session/([0-9a-f]+)/(seed|mutate|undo|history)$")


class ApiError(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status


class _Session:
    __slots__ = ("spec", "description", "layout", "seed", "walk", "lock")

    def __init__(self, resolved):
        self.spec = resolved.spec
        self.description = resolved.description
        self.layout = resolved.layout
        self.seed = resolved.seed
        self.walk = []
        self.lock = threading.Lock()


def _seed_payload(session):
    seed = session.seed
    n, m = seed.matrix.n, seed.matrix.m
    return {
        "preset": session.spec,
        "quiver": {
            "n": n,
            "m": m,
            "d": list(seed.matrix.d),
            "entries": [list(row) for row in seed.matrix.entries],
            "labels": list(seed.labels),
            "frozen": [i >= n for i in range(m)],
        },
        "cluster": [str(e) for e in seed.entries],
        "layout": session.layout,
        "steps": len(session.walk),
    }


class SessionStore:
    """Sessions keyed by id; all seed state changes go through here."""

    def __init__(self):
        self._lock = threading.Lock()
        self._sessions = {}

    def _get(self, sid):
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ApiError(404, f"no session {sid}")
        return session

    def create(self, spec):
        if not isinstance(spec, str):
            raise ApiError(400, "body needs a string 'preset'")
        try:
            resolved = resolve_preset(spec)
        except PresetError as exc:
            raise ApiError(400, str(exc)) from None
        session = _Session(resolved)
        sid = uuid.uuid4().hex
        with self._lock:
            self._sessions[sid] = session
        return {"id": sid, "seed": _seed_payload(session)}

    def seed(self, sid):
        session = self._get(sid)
        with session.lock:
            return _seed_payload(session)

    def mutate(self, sid, vertex):
        session = self._get(sid)
        if not isinstance(vertex, int) or isinstance(vertex, bool):
            raise ApiError(400, "body needs an integer 'vertex'")
        with session.lock:
            n = session.seed.matrix.n
            if not 1 <= vertex <= n:
                raise ApiError(400, f"vertex {vertex} out of range 1..{n}")
            session.seed = session.seed.mutate(vertex - 1)
            session.walk.append(vertex)
            return _seed_payload(session)

    def undo(self, sid):
        session = self._get(sid)
        with session.lock:
            if not session.walk:
                raise ApiError(400, "nothing to undo")
            walk = session.walk[:-1]
            seed = resolve_preset(session.spec).seed
            for v in walk:
                seed = seed.mutate(v - 1)
            session.seed = seed
            session.walk = walk
            return _seed_payload(session)

    def history(self, sid):
        session = self._get(sid)
        with session.lock:
            return {"preset": session.spec, "walk": list(session.walk)}


def _preset_listing():
    descriptions = {name: desc for name, _, desc in preset_names()}
    rows = []
    for spec in sample_specs():
        name = spec.split(":")[0]
        rows.append({
            "spec": spec,
            "name": name,
            "description": descriptions[name],
        })
    return {"presets": rows}


def make_handler(store, static_dir=None):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):
            pass

        def _send_json(self, status, obj):
            body = json.dumps(obj).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _read_json(self):
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            if not raw:
                return {}
            try:
                body = json.loads(raw)
            except ValueError:
                raise ApiError(400, "request body is not JSON") from None
            if not isinstance(body, dict):
                raise ApiError(400, "request body must be a JSON object")
            return body

        def _serve_static(self):
            if static_dir is None:
                raise ApiError(404, f"no route {self.path}")
            rel = self.path.split("?")[0].lstrip("/") or "index.html"
            full = os.path.realpath(os.path.join(static_dir, rel))
            root = os.path.realpath(static_dir)
            if not full.startswith(root + os.sep) and full != root:
                raise ApiError(404, "not found")
            if os.path.isdir(full):
                full = os.path.join(full, "index.html")
            if not os.path.isfile(full):
                raise ApiError(404, "not found")
            ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
            with open(full, "rb") as fh:
                body = fh.read()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "GET, POST")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_GET(self):
            try:
                if self.path == "/api/presets":
                    return self._send_json(200, _preset_listing())
                hit = _SESSION_ROUTE.match(self.path)
                if hit:
                    sid, action = hit.groups()
                    if action == "seed":
                        return self._send_json(200, store.seed(sid))
                    if action == "history":
                        return self._send_json(200, store.history(sid))
                    raise ApiError(405, f"{action} needs POST")
                if self.path.startswith("/api/"):
                    raise ApiError(404, f"no route {self.path}")
                return self._serve_static()
            except ApiError as exc:
                self._send_json(exc.status, {"error": str(exc)})

        def do_POST(self):
            try:
                if self.path == "/api/session":
                    body = self._read_json()
                    return self._send_json(200, store.create(body.get("preset")))
                hit = _SESSION_ROUTE.match(self.path)
                if hit:
                    sid, action = hit.groups()
                    if action == "mutate":
                        body = self._read_json()
                        return self._send_json(
                            200, store.mutate(sid, body.get("vertex")))
                    if action == "undo":
                        return self._send_json(200, store.undo(sid))
                    raise ApiError(405, f"{action} needs GET")
                raise ApiError(404, f"no route {self.path}")
            except ApiError as exc:
                self._send_json(exc.status, {"error": str(exc)})

    return Handler


def default_static_dir():
    configured = os.environ.get("CLUSTERKIT_STATIC")
    if configured:
        return configured
    bundled = os.path.join(os.path.dirname(__file__), "static")
    return bundled if os.path.isdir(bundled) else None


def make_server(host="127.0.0.1", port=8765, static_dir=None):
    store = SessionStore()
    handler = make_handler(store, static_dir=static_dir)
    return ThreadingHTTPServer((host, port), handler)


def run_server(host="127.0.0.1", port=8765, static_dir=None):
    if static_dir is None:
        static_dir = default_static_dir()
    server = make_server(host, port, static_dir=static_dir)
    bound_host, bound_port = server.server_address[:2]
    print(f"listening on http://{bound_host}:{bound_port}", flush=True)
    try:
        server.serve_forever()
    finally:
        server.server_close()
