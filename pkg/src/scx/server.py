"""JSON-over-HTTP session API for the homotopy puzzle.

Sessions live in memory (optionally journaled to disk as newline-delimited
JSON so games survive restarts).  Every mutation re-validates the move
certificate server-side; clients are untrusted.  Illegal moves answer 409.

Routes:
    POST /session                {"catalog": "C_6"} | {"graph": {...}}, "goal": "point" | {"target": ...}
    GET  /session/{id}
    GET  /session/{id}/legal-moves[?limit=k]
    POST /session/{id}/move      move JSON
    POST /session/{id}/undo
    GET  /catalog
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import catalog
from .errors import IllegalMove, ScxError, SizeLimit
from .graphs import Graph, _bits, canonical_code
from .homotopy import (
    Contract,
    EdgeRefine,
    EdgeRemove,
    Expand,
    apply_move,
    move_is_legal,
)
from .invariants import graph_euler
from .io import graph_from_json, graph_to_json, move_from_json, move_to_json


def _resolve_graph(obj: dict) -> Graph:
    if "catalog" in obj:
        return Graph(catalog.graph_by_name(obj["catalog"]).adj)
    if "graph" in obj:
        return Graph(graph_from_json(obj["graph"]).adj)
    raise ScxError('need a "catalog" name or an explicit "graph"')


@dataclass
class Session:
    id: str
    start: Graph
    goal_kind: str  # "point" or "target"
    target: Graph | None
    current: Graph = None  # type: ignore[assignment]
    history: list[tuple] = field(default_factory=list)  # (move, certificate)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        if self.current is None:
            self.current = self.start

    def solved(self) -> bool:
        if self.goal_kind == "point":
            return self.current.n == 1
        assert self.target is not None
        if self.current.n != self.target.n:
            return False
        if self.current.adj == self.target.adj:
            return True
        try:
            return canonical_code(self.current) == canonical_code(self.target)
        except SizeLimit:
            return False

    def state(self) -> dict:
        goal = "point" if self.goal_kind == "point" else {"target": graph_to_json(self.target)}
        return {
            "id": self.id,
            "graph": graph_to_json(self.current),
            "chi": graph_euler(self.current),
            "goal": goal,
            "history_length": len(self.history),
            "solved": self.solved(),
        }

    def apply(self, move) -> dict:
        new, cert = apply_move(self.current, move)  # raises IllegalMove
        self.current = new
        self.history.append((move, cert))
        return self.state()

    def undo(self) -> dict:
        if not self.history:
            return self.state()
        self.history.pop()
        cur = self.start
        for move, _ in self.history:
            cur, _ = apply_move(cur, move)
        self.current = cur
        return self.state()


def legal_moves(A: Graph, limit: int | None = None) -> list[dict]:
    """All contractions, refinements and removals, plus expansions over
    connected subgraphs of up to three vertices."""
    out: list[dict] = []
    for v in range(A.n):
        if move_is_legal(A, Contract(v)):
            out.append(move_to_json(Contract(v)))
    for a, b in A.edges():
        out.append(move_to_json(EdgeRefine(a, b)))
    for a, b in A.edges():
        if move_is_legal(A, EdgeRemove(a, b)):
            out.append(move_to_json(EdgeRemove(a, b)))
    for v in range(A.n):
        out.append(move_to_json(Expand((v,))))
    for a, b in A.edges():
        out.append(move_to_json(Expand((a, b))))
    seen = set()
    for a, b in A.edges():
        for c in _bits(A.adj[a] | A.adj[b]):
            key = tuple(sorted({a, b, c}))
            if len(key) == 3 and key not in seen:
                seen.add(key)
                out.append(move_to_json(Expand(key)))
    return out if limit is None else out[:limit]


class PuzzleServer:
    def __init__(self, journal: str | None = None):
        self.sessions: dict[str, Session] = {}
        self.journal_path = Path(journal) if journal else None
        self.table_lock = threading.Lock()
        if self.journal_path and self.journal_path.exists():
            self._replay_journal()

    # -- journal ------------------------------------------------------------

    def _journal(self, event: dict) -> None:
        if self.journal_path is None:
            return
        with self.table_lock:
            with self.journal_path.open("a") as fh:
                fh.write(json.dumps(event) + "\n")

    def _replay_journal(self) -> None:
        for line in self.journal_path.read_text().splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            kind = event["event"]
            if kind == "create":
                s = self._make_session(event["spec"], sid=event["id"], journal=False)
                self.sessions[s.id] = s
            elif kind == "move" and event["id"] in self.sessions:
                try:
                    self.sessions[event["id"]].apply(move_from_json(event["move"]))
                except ScxError:
                    pass  # a journaled illegal move cannot happen; be safe
            elif kind == "undo" and event["id"] in self.sessions:
                self.sessions[event["id"]].undo()

    # -- session handling ----------------------------------------------------

    def _make_session(self, spec: dict, sid: str | None = None, journal: bool = True) -> Session:
        start = _resolve_graph(spec)
        goal = spec.get("goal", "point")
        if goal == "point":
            session = Session(sid or uuid.uuid4().hex[:12], start, "point", None)
        else:
            target = _resolve_graph(goal if isinstance(goal, dict) else {"catalog": goal})
            session = Session(sid or uuid.uuid4().hex[:12], start, "target", target)
        if journal:
            self._journal({"event": "create", "id": session.id, "spec": spec})
        return session

    def create_session(self, spec: dict) -> dict:
        session = self._make_session(spec)
        with self.table_lock:
            self.sessions[session.id] = session
        return session.state()

    def get(self, sid: str) -> Session | None:
        return self.sessions.get(sid)


class _Handler(BaseHTTPRequestHandler):
    server_version = "scx-puzzle/0.1"
    app: PuzzleServer  # set by serve()

    def log_message(self, fmt, *args):  # stderr noise off
        pass

    def _send(self, code: int, obj: dict) -> None:
        body = json.dumps(obj).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length", 0))
        if length == 0:
            return {}
        return json.loads(self.rfile.read(length))

    def do_OPTIONS(self):
        self._send(204, {})

    def do_GET(self):
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        query = self.path.partition("?")[2]
        if parts == ["catalog"]:
            self._send(200, {"graphs": catalog.graph_names(), "complexes": sorted(catalog.COMPLEXES)})
            return
        if len(parts) >= 2 and parts[0] == "session":
            session = self.app.get(parts[1])
            if session is None:
                self._send(404, {"error": "no such session"})
                return
            if len(parts) == 2:
                with session.lock:
                    self._send(200, session.state())
                return
            if parts[2] == "legal-moves":
                limit = None
                for pair in query.split("&"):
                    if pair.startswith("limit="):
                        limit = int(pair.split("=", 1)[1])
                with session.lock:
                    moves = legal_moves(session.current, limit)
                self._send(200, {"moves": moves})
                return
        self._send(404, {"error": f"unknown path {self.path}"})

    def do_POST(self):
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        try:
            body = self._body()
        except json.JSONDecodeError:
            self._send(400, {"error": "malformed JSON"})
            return
        try:
            if parts == ["session"]:
                self._send(201, self.app.create_session(body))
                return
            if len(parts) == 3 and parts[0] == "session":
                session = self.app.get(parts[1])
                if session is None:
                    self._send(404, {"error": "no such session"})
                    return
                if parts[2] == "move":
                    move = move_from_json(body)
                    try:
                        with session.lock:
                            state = session.apply(move)
                    except IllegalMove as exc:
                        self._send(409, {"error": "illegal move", "reason": exc.reason})
                        return
                    self.app._journal({"event": "move", "id": session.id, "move": body})
                    self._send(200, state)
                    return
                if parts[2] == "undo":
                    with session.lock:
                        state = session.undo()
                    self.app._journal({"event": "undo", "id": session.id})
                    self._send(200, state)
                    return
            self._send(404, {"error": f"unknown path {self.path}"})
        except ScxError as exc:
            self._send(400, {"error": str(exc)})


def make_server(port: int, journal: str | None = None) -> ThreadingHTTPServer:
    app = PuzzleServer(journal)
    handler = type("BoundHandler", (_Handler,), {"app": app})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int, journal: str | None = None) -> None:
    httpd = make_server(port, journal)
    print(f"puzzle API listening on http://127.0.0.1:{port}", flush=True)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
